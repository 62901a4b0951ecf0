#include "qglab/refuter.hpp"

#include <random>
#include <sstream>

#include "qglab/word_families.hpp"

namespace qgl {

namespace {

const GeneratorAlphabet& z2_alphabet() {
  static const GeneratorAlphabet a = AbelianModel::standard(2).alphabet();
  return a;
}

BSParams parse_bs_group(const std::string& group) {
  BSParams p;
  char close = 0;
  std::istringstream in(group.substr(3));
  char comma = 0;
  if (group.rfind("bs(", 0) != 0 || !(in >> p.m >> comma >> p.n >> close) || comma != ',' || close != ')')
    throw InvalidParameter("unknown group '" + group + "'");
  p.validate();
  return p;
}

bool is_bs(const std::string& group) { return group.rfind("bs(", 0) == 0; }

// w = alpha beta gamma with beta the marked segment.
struct Script {
  Word alpha, beta, gamma;
  Word whole() const { return alpha + beta + gamma; }
};

Script script_for(const std::string& group, std::size_t q) {
  const auto qi = static_cast<std::int64_t>(q);
  Script s;
  if (!is_bs(group)) {
    SegmentedWord a, b, c;
    push_power(a, kB, -qi);
    push_power(a, kA, 2 * qi);
    push_power(a, kB, qi);
    push_power(b, kA, -qi);
    push_power(c, kB, qi);
    push_power(c, kA, 2 * qi);
    push_power(c, kB, -qi);
    return {a.expand(), b.expand(), c.expand()};
  }
  const BSParams p = parse_bs_group(group);
  SegmentedWord b;
  push_power(b, kT, -qi);
  return {bs_w_left(p, qi).expand(), b.expand(), bs_w_right(p, qi).expand()};
}

bool evaluates_to_identity(const std::string& group, const Word& w) {
  if (is_bs(group)) return bs_normalize(w, parse_bs_group(group)).is_identity();
  const auto model = AbelianModel::standard(2);
  return model.is_identity(model.evaluate(w));
}

QGReport run_check(const std::string& group, const Word& w, const Rational& lambda, const Rational& epsilon) {
  if (is_bs(group)) {
    BSModel model(parse_bs_group(group));
    DistanceOracle<BSModel> oracle(model);
    return check(w, lambda, epsilon, model, oracle);
  }
  const auto model = AbelianModel::standard(2);
  DistanceOracle<AbelianModel> oracle(model);
  return check(w, lambda, epsilon, model, oracle);
}

std::size_t choose_q(std::size_t p, const Rational& epsilon) {
  const Integer e = ceil(epsilon);
  std::size_t q = std::max<std::size_t>(p, 1);
  if (e > Integer(q)) q = static_cast<std::size_t>(to_int64(e));
  return q;
}

std::size_t pump_count(std::size_t q, std::size_t k) { return 1 + (q + k - 1) / k; }

// Mostly straight random words, which are often quasigeodesic.
Word random_word(std::mt19937_64& rng, const GeneratorAlphabet& alphabet, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len_dist(1, max_len);
  std::uniform_int_distribution<Letter> letter_dist(0, static_cast<Letter>(alphabet.size() - 1));
  std::bernoulli_distribution repeat(0.75);
  const auto len = len_dist(rng);
  Word w;
  while (w.size() < len) {
    if (!w.empty() && repeat(rng)) {
      w.push_back(w[w.size() - 1]);
      continue;
    }
    const Letter l = letter_dist(rng);
    if (!w.empty() && alphabet.inverse(l) == w[w.size() - 1]) continue;
    w.push_back(l);
  }
  return w;
}

template <CayleyModel M>
void sample_premise(const Grammar& cnf, const M& model, const std::vector<Word>& families, const Rational& lambda0,
                    const Rational& epsilon0, const RefuteOptions& options) {
  DistanceOracle<M> oracle(model);
  const auto& alphabet = model.alphabet();
  for (const auto& w : families)
    if (!cyk_member(cnf, w))
      throw SamplingRefutedPremise("grammar misses a family quasigeodesic", serialize(w, alphabet));
  std::mt19937_64 rng(options.seed);
  std::size_t certified = 0;
  for (std::size_t attempt = 0; certified < options.random_samples && attempt < 20 * options.random_samples;
       ++attempt) {
    const Word w = random_word(rng, alphabet, 40);
    if (check(w, lambda0, epsilon0, model, oracle).verdict != Verdict::Certified) continue;
    ++certified;
    if (!cyk_member(cnf, w))
      throw SamplingRefutedPremise("grammar misses a certified quasigeodesic", serialize(w, alphabet));
  }
}

WitnessCertificate pump(const std::string& group, const Grammar& g, const Grammar& cnf, const Rational& lambda,
                        const Rational& epsilon, const Rational& lambda0, const Rational& epsilon0) {
  WitnessCertificate c;
  c.group = group;
  c.lambda0 = lambda0;
  c.epsilon0 = epsilon0;
  c.lambda = lambda;
  c.epsilon = epsilon;
  c.grammar_text = g.to_text();
  c.grammar_digest = grammar_digest(g);
  c.p = ogden_constant(cnf);
  c.q = choose_q(c.p, epsilon);
  const auto& alphabet = c.alphabet();

  const Script s = script_for(group, c.q);
  const Word w = s.whole();
  if (!cyk_member(cnf, w)) throw SamplingRefutedPremise("grammar misses the pumping word", serialize(w, alphabet));
  std::set<std::size_t> marks;
  for (std::size_t i = 0; i < s.beta.size(); ++i) marks.insert(s.alpha.size() + i);
  const auto d = ogden_decompose(cnf, w, marks);
  c.u = d.u;
  c.x = d.x;
  c.z = d.z;
  c.y = d.y;
  c.v = d.v;

  const std::size_t b0 = s.alpha.size(), b1 = b0 + s.beta.size();
  auto inside = [&](std::size_t start, std::size_t len) { return len > 0 && start >= b0 && start + len <= b1; };
  if (inside(d.x_start, d.x.size())) {
    c.pumped_side = 'x';
    c.k = d.x.size();
  } else if (inside(d.y_start, d.y.size())) {
    c.pumped_side = 'y';
    c.k = d.y.size();
  } else {
    throw ExtractionFailed("neither x nor y lies inside the marked segment");
  }
  c.pump = pump_count(c.q, c.k);
  c.witness = d.pumped(c.pump);
  auto tree = cyk(cnf, c.witness);
  if (!tree) throw ExtractionFailed("pumped word left the language");
  c.parse_fingerprint = tree->fingerprint();

  c.violation_length = s.alpha.size() + 2 * s.beta.size();
  if (c.pumped_side == 'y') c.violation_length = 2 * s.beta.size() + s.gamma.size();
  c.violation_offset = c.pumped_side == 'x' ? 0 : c.witness.size() - c.violation_length;
  const Word sub = c.witness.slice(c.violation_offset, c.violation_offset + c.violation_length);
  const Word expected = c.pumped_side == 'x' ? s.alpha + s.beta + s.beta : s.beta + s.beta + s.gamma;
  if (sub != expected) throw ExtractionFailed("pumped word does not expose the closed loop");
  if (!evaluates_to_identity(group, sub)) throw ExtractionFailed("loop subword is not the identity");
  if (is_bs(group)) {
    const auto bp = parse_bs_group(group);
    c.length_bound = static_cast<std::size_t>(4 * bp.m) * c.q + 7 * c.q + 2;
  }
  c.report = run_check(group, sub, lambda, epsilon);
  if (c.report.verdict != Verdict::Violated) throw ExtractionFailed("checker did not report the loop as violated");
  return c;
}

}  // namespace

const GeneratorAlphabet& WitnessCertificate::alphabet() const { return is_bs(group) ? bs_alphabet() : z2_alphabet(); }

WitnessCertificate refute_z2(const Grammar& g, const Rational& lambda, const Rational& epsilon,
                             const RefuteOptions& options) {
  if (!(g.terminals() == z2_alphabet())) throw InvalidParameter("grammar must be over the alphabet {a, b}");
  const Grammar cnf = to_cnf(g);
  const Rational lambda0 = options.lambda0.value_or(Rational(5));
  const auto model = AbelianModel::standard(2);
  std::vector<Word> families;
  for (std::int64_t q = 1; q <= 4; ++q) families.push_back(spiral_z2(q).expand());
  sample_premise(cnf, model, families, lambda0, options.epsilon0, options);
  return pump("z2", g, cnf, lambda, epsilon, lambda0, options.epsilon0);
}

WitnessCertificate refute_bs(const Grammar& g, const Rational& lambda, const Rational& epsilon, std::int64_t m,
                             std::int64_t n, const RefuteOptions& options) {
  const BSParams params{m, n};
  params.validate();
  if (!(n > m)) throw UnsupportedParameters("refute_bs needs n > m >= 1");
  if (!(g.terminals() == bs_alphabet())) throw InvalidParameter("grammar must be over the alphabet {a, t}");
  const Grammar cnf = to_cnf(g);
  const BSModel model(params);
  const Word w1 = bs_w(params, 1).expand();
  Rational lambda0;
  if (options.lambda0) {
    lambda0 = *options.lambda0;
  } else {
    DistanceOracle<BSModel> oracle(model);
    auto r = min_lambda(w1, options.epsilon0, model, oracle, MinLambdaMode::Cascade);
    if (r.infinite) throw ExtractionFailed("w_1 is not quasigeodesic for the given epsilon0");
    lambda0 = r.value;
  }
  sample_premise(cnf, model, {w1}, lambda0, options.epsilon0, options);
  return pump(model.id(), g, cnf, lambda, epsilon, lambda0, options.epsilon0);
}

std::string WitnessCertificate::serialize() const {
  const auto& a = alphabet();
  std::ostringstream out;
  out << "[certificate]\n";
  out << "group=" << group << "\n";
  out << "lambda0=" << to_string(lambda0) << "\n";
  out << "epsilon0=" << to_string(epsilon0) << "\n";
  out << "lambda=" << to_string(lambda) << "\n";
  out << "epsilon=" << to_string(epsilon) << "\n";
  out << "p=" << p << "\nq=" << q << "\nk=" << k << "\npump=" << pump << "\n";
  out << "pumped_side=" << pumped_side << "\n";
  out << "grammar_digest=" << grammar_digest << "\n";
  out << "witness=" << qgl::serialize(witness, a) << "\n";
  out << "witness_length=" << witness.size() << "\n";
  out << "parse_fingerprint=" << parse_fingerprint << "\n";
  out << "violation_offset=" << violation_offset << "\n";
  out << "violation_length=" << violation_length << "\n";
  if (length_bound) out << "length_bound=" << *length_bound << "\n";
  out << "[decomposition]\n";
  out << "u=" << qgl::serialize(u, a) << "\n";
  out << "x=" << qgl::serialize(x, a) << "\n";
  out << "z=" << qgl::serialize(z, a) << "\n";
  out << "y=" << qgl::serialize(y, a) << "\n";
  out << "v=" << qgl::serialize(v, a) << "\n";
  out << "[report]\n" << report.serialize();
  out << "[grammar]\n" << grammar_text;
  return out.str();
}

namespace {

std::size_t to_size(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    auto x = std::stoull(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return static_cast<std::size_t>(x);
  } catch (const std::logic_error&) {
    throw InvalidParameter("bad value for " + key + ": '" + v + "'");
  }
}

}  // namespace

WitnessCertificate WitnessCertificate::parse(const std::string& text) {
  WitnessCertificate c;
  std::istringstream in(text);
  std::string line, section, report_text;
  std::vector<std::pair<std::string, std::string>> fields, pieces;
  while (std::getline(in, line)) {
    if (line.size() >= 2 && line.front() == '[' && line.back() == ']' && section != "grammar") {
      section = line.substr(1, line.size() - 2);
      continue;
    }
    if (section == "grammar") {
      c.grammar_text += line + "\n";
      continue;
    }
    if (line.empty()) continue;
    if (section == "report") {
      report_text += line + "\n";
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InvalidParameter("certificate line without '=': " + line);
    auto kv = std::make_pair(line.substr(0, eq), line.substr(eq + 1));
    if (section == "certificate")
      fields.push_back(kv);
    else if (section == "decomposition")
      pieces.push_back(kv);
    else
      throw InvalidParameter("certificate line outside a known section: " + line);
  }
  std::string witness_text;
  for (const auto& [key, v] : fields) {
    if (key == "group") c.group = v;
    else if (key == "lambda0") c.lambda0 = parse_rational(v);
    else if (key == "epsilon0") c.epsilon0 = parse_rational(v);
    else if (key == "lambda") c.lambda = parse_rational(v);
    else if (key == "epsilon") c.epsilon = parse_rational(v);
    else if (key == "p") c.p = to_size(key, v);
    else if (key == "q") c.q = to_size(key, v);
    else if (key == "k") c.k = to_size(key, v);
    else if (key == "pump") c.pump = to_size(key, v);
    else if (key == "pumped_side") {
      if (v != "x" && v != "y") throw InvalidParameter("pumped_side must be x or y");
      c.pumped_side = v[0];
    } else if (key == "grammar_digest") c.grammar_digest = v;
    else if (key == "witness") witness_text = v;
    else if (key == "witness_length") (void)to_size(key, v);
    else if (key == "parse_fingerprint") c.parse_fingerprint = v;
    else if (key == "violation_offset") c.violation_offset = to_size(key, v);
    else if (key == "violation_length") c.violation_length = to_size(key, v);
    else if (key == "length_bound") c.length_bound = to_size(key, v);
    else throw InvalidParameter("unknown certificate key '" + key + "'");
  }
  if (c.group.empty()) throw InvalidParameter("certificate has no group");
  if (c.group != "z2") parse_bs_group(c.group);
  const auto& a = c.alphabet();
  c.witness = parse_word(witness_text, a);
  for (const auto& [key, v] : pieces) {
    Word w = parse_word(v, a);
    if (key == "u") c.u = w;
    else if (key == "x") c.x = w;
    else if (key == "z") c.z = w;
    else if (key == "y") c.y = w;
    else if (key == "v") c.v = w;
    else throw InvalidParameter("unknown decomposition key '" + key + "'");
  }
  c.report = QGReport::parse(report_text);
  return c;
}

VerifyResult verify_certificate(const WitnessCertificate& c) {
  auto fail = [](std::string why) { return VerifyResult{false, std::move(why)}; };
  try {
    if (c.group != "z2" && !is_bs(c.group)) return fail("unknown group");
    const auto& alphabet = c.alphabet();
    const Grammar g = parse_grammar(c.grammar_text, alphabet);
    if (grammar_digest(g) != c.grammar_digest) return fail("grammar digest mismatch");
    const Grammar cnf = to_cnf(g);
    if (ogden_constant(cnf) != c.p) return fail("Ogden constant mismatch");
    if (choose_q(c.p, c.epsilon) != c.q) return fail("q differs from max(p, ceil(epsilon))");

    const Script s = script_for(c.group, c.q);
    const Word w = s.whole();
    OgdenDecomposition d;
    d.u = c.u;
    d.x = c.x;
    d.z = c.z;
    d.y = c.y;
    d.v = c.v;
    d.p = c.p;
    d.x_start = c.u.size();
    d.z_start = d.x_start + c.x.size();
    d.y_start = d.z_start + c.z.size();
    d.v_start = d.y_start + c.y.size();
    std::set<std::size_t> marks;
    for (std::size_t i = 0; i < s.beta.size(); ++i) marks.insert(s.alpha.size() + i);
    if (!d.verify(cnf, w, marks)) return fail("decomposition does not satisfy the pumping conditions");

    const std::size_t b0 = s.alpha.size(), b1 = b0 + s.beta.size();
    const Word& piece = c.pumped_side == 'x' ? c.x : c.y;
    const std::size_t start = c.pumped_side == 'x' ? d.x_start : d.y_start;
    if (piece.empty() || start < b0 || start + piece.size() > b1) return fail("pumped piece is not inside the marked segment");
    if (piece.size() != c.k) return fail("k mismatch");
    if (pump_count(c.q, c.k) != c.pump) return fail("pump count mismatch");
    if (d.pumped(c.pump) != c.witness) return fail("witness is not the pumped word");

    auto tree = cyk(cnf, c.witness);
    if (!tree) return fail("witness is not in the language");
    if (tree->fingerprint() != c.parse_fingerprint) return fail("parse fingerprint mismatch");

    const std::size_t len = c.pumped_side == 'x' ? s.alpha.size() + 2 * s.beta.size() : 2 * s.beta.size() + s.gamma.size();
    const std::size_t off = c.pumped_side == 'x' ? 0 : c.witness.size() - len;
    if (c.violation_length != len || c.violation_offset != off) return fail("violation location mismatch");
    const Word sub = c.witness.slice(off, off + len);
    if (!evaluates_to_identity(c.group, sub)) return fail("violating subword is not the identity");
    if (is_bs(c.group)) {
      const auto bp = parse_bs_group(c.group);
      if (c.length_bound != static_cast<std::size_t>(4 * bp.m) * c.q + 7 * c.q + 2) return fail("length bound mismatch");
    }

    const QGReport replay = run_check(c.group, sub, c.lambda, c.epsilon);
    if (replay.verdict != Verdict::Violated) return fail("replayed check is not Violated");
    if (replay.serialize() != c.report.serialize()) return fail("replayed report differs");
    return {true, "replayed"};
  } catch (const Error& e) {
    return fail(e.what());
  }
}

}  // namespace qgl
