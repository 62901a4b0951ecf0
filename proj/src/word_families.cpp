#include "qglab/word_families.hpp"

#include "qglab/errors.hpp"

namespace qgl {

namespace {

void require_positive(std::int64_t v, const char* what, std::int64_t minimum = 1) {
  if (v < minimum) throw InvalidParameter(std::string(what) + " must be at least " + std::to_string(minimum));
}

Letter inv(Letter positive) { return positive + 1; }

}  // namespace

void push_power(SegmentedWord& w, Letter positive, std::int64_t k) {
  if (k > 0) w.push(positive, static_cast<std::uint64_t>(k));
  if (k < 0) w.push(inv(positive), static_cast<std::uint64_t>(-k));
}

void push_power(SegmentedWord& w, Letter positive, const Integer& k) { push_power(w, positive, to_int64(k)); }

SegmentedWord spiral_z2(std::int64_t q) {
  require_positive(q, "q");
  SegmentedWord w;
  push_power(w, kB, -q);
  push_power(w, kA, 2 * q);
  push_power(w, kB, q);
  push_power(w, kA, -q);
  push_power(w, kB, q);
  push_power(w, kA, 2 * q);
  push_power(w, kB, -q);
  return w;
}

SegmentedWord spiral_loop(std::int64_t q) {
  require_positive(q, "q");
  SegmentedWord w;
  push_power(w, kB, -q);
  push_power(w, kA, 2 * q);
  push_power(w, kB, q);
  push_power(w, kA, -2 * q);
  return w;
}

SegmentedWord nilpotent_spiral(std::int64_t n) {
  require_positive(n, "n", 2);
  if (n > 1'000'000) throw InvalidParameter("n too large");
  SegmentedWord w;
  push_power(w, kB, -n);
  push_power(w, kA, n * n);
  push_power(w, kB, n);
  push_power(w, kA, -n);
  push_power(w, kB, n);
  push_power(w, kA, n * n);
  push_power(w, kB, -n);
  return w;
}

SegmentedWord commutator_word(std::int64_t p, std::int64_t q) {
  require_positive(p, "p");
  require_positive(q, "q");
  SegmentedWord w;
  push_power(w, kA, -p);
  push_power(w, kB, -q);
  push_power(w, kA, p);
  push_power(w, kB, q);
  return w;
}

BSSequence bs_sequence(std::int64_t m, std::int64_t n, std::int64_t k) {
  if (!(m >= 1 && n > m)) throw InvalidParameter("bs_sequence requires n > m >= 1");
  require_positive(k, "k");
  BSSequence s;
  s.m = m;
  s.n = n;
  s.d.push_back(0);
  s.d.push_back(1);
  while (static_cast<std::int64_t>(s.d.size()) <= k) {
    const Integer& last = s.d.back();
    s.d.push_back((n * last + m - 1) / m);
  }
  s.d.resize(static_cast<std::size_t>(k) + 1);
  for (const auto& d : s.d) {
    s.y.push_back(m * d);
    s.z.push_back(n * d);
  }
  for (std::size_t i = 0; i + 1 < s.d.size(); ++i) s.x.push_back(s.y[i + 1] - s.z[i]);
  return s;
}

namespace {

SegmentedWord u_or_v(const BSParams& p, std::int64_t q, int sign) {
  require_positive(q, "q");
  auto seq = bs_sequence(p.m, p.n, q);
  SegmentedWord w;
  for (std::int64_t i = 0; i < q; ++i) {
    const Integer& x = seq.x[static_cast<std::size_t>(i)];
    push_power(w, kA, sign > 0 ? x : Integer(-x));
    w.push(kTinv);
  }
  return w;
}

SegmentedWord t_power(std::int64_t k) {
  SegmentedWord w;
  push_power(w, kT, k);
  return w;
}

}  // namespace

SegmentedWord bs_u(const BSParams& p, std::int64_t q) { return u_or_v(p, q, +1); }
SegmentedWord bs_v(const BSParams& p, std::int64_t q) { return u_or_v(p, q, -1); }

SegmentedWord bs_w_left(const BSParams& p, std::int64_t q) {
  require_positive(q, "q");
  auto v = bs_v(p, 2 * q);
  SegmentedWord w;
  w.push(kAinv);
  w.append(t_power(2 * q));
  w.append(v);
  w.push(kA);
  w.append(v.inverse(bs_alphabet()));
  return w;
}

SegmentedWord bs_w_right(const BSParams& p, std::int64_t q) {
  require_positive(q, "q");
  auto u = bs_u(p, 2 * q);
  SegmentedWord w;
  w.push(kA);
  w.append(t_power(2 * q));
  w.append(u);
  w.push(kAinv);
  w.append(u.inverse(bs_alphabet()));
  return w;
}

SegmentedWord bs_w(const BSParams& p, std::int64_t q) {
  SegmentedWord w = bs_w_left(p, q);
  w.append(t_power(-q));
  w.append(bs_w_right(p, q));
  return w;
}

SegmentedWord bs_w_negative(const BSParams& p, std::int64_t q) {
  if (!(p.m >= 1 && p.n < 0 && -p.n > p.m)) throw InvalidParameter("bs_w_negative requires n < 0 and |n| > m >= 1");
  BSParams squared{p.m * p.m, p.n * p.n};
  return bs_w(squared, q).substitute_power(kT, 2, bs_alphabet());
}

bool verify_collecting_class2(std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 1 || p > 50 || q > 50) throw InvalidParameter("p and q must lie in 1..50");
  const auto model = HeisenbergModel::standard();
  SegmentedWord lhs;
  push_power(lhs, kB, q);
  push_power(lhs, kA, p);
  SegmentedWord rhs;
  push_power(rhs, kA, p);
  push_power(rhs, kB, q);
  for (std::int64_t i = 0; i < p * q; ++i) {
    rhs.push(kBinv);
    rhs.push(kAinv);
    rhs.push(kB);
    rhs.push(kA);
  }
  return model.evaluate(lhs.expand()) == model.evaluate(rhs.expand());
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{"spiral-z2", "nil-spiral", "commutator", "bs-u",
                                              "bs-v",      "bs-w",       "bs-w-neg"};
  return names;
}

std::string family_group(const std::string& name) {
  if (name == "spiral-z2") return "z2";
  if (name == "nil-spiral" || name == "commutator") return "heisenberg";
  if (name == "bs-u" || name == "bs-v" || name == "bs-w" || name == "bs-w-neg") return "bs";
  throw InvalidParameter("unknown family '" + name + "'");
}

SegmentedWord make_family(const std::string& name, const FamilyArgs& args) {
  if (name == "spiral-z2") return spiral_z2(args.q);
  if (name == "nil-spiral") return nilpotent_spiral(args.q);
  if (name == "commutator") return commutator_word(args.q, args.q2);
  if (name == "bs-u") return bs_u(args.bs, args.q);
  if (name == "bs-v") return bs_v(args.bs, args.q);
  if (name == "bs-w") return bs_w(args.bs, args.q);
  if (name == "bs-w-neg") return bs_w_negative(args.bs, args.q);
  throw InvalidParameter("unknown family '" + name + "'");
}

}  // namespace qgl
