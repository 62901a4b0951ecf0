#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qglab/errors.hpp"
#include "qglab/quasigeodesic.hpp"
#include "qglab/word_families.hpp"
#include "support/oracles.hpp"

using namespace qgl;

namespace {
SegmentedWord t_power(std::int64_t k) {
  SegmentedWord w;
  push_power(w, kT, k);
  return w;
}
SegmentedWord a_power(const Integer& k) {
  SegmentedWord w;
  push_power(w, kA, k);
  return w;
}
SegmentedWord cat(SegmentedWord x, const SegmentedWord& y) {
  x.append(y);
  return x;
}
}  // namespace

TEST_CASE("z2 spiral") {
  const auto z2 = AbelianModel::standard(2);
  CHECK(spiral_z2(1).length() == 9);
  CHECK(z2.evaluate(spiral_z2(1).expand()) == AbelianVector{3, 0});
  CHECK(spiral_z2(3).length() == 27);
  CHECK(spiral_z2(3).expand() == parse_word("b^-3 a^6 b^3 a^-3 b^3 a^6 b^-3", z2.alphabet()));
  for (std::int64_t q = 1; q <= 5; ++q) {
    CHECK(z2.evaluate(spiral_loop(q).expand()) == AbelianVector{0, 0});
    CHECK(spiral_loop(q).length() == static_cast<std::uint64_t>(6 * q));
  }
  CHECK_THROWS_AS(spiral_z2(0), InvalidParameter);
}

TEST_CASE("nilpotent spiral") {
  const auto z2 = AbelianModel::standard(2);
  const auto h = HeisenbergModel::standard();
  CHECK(nilpotent_spiral(2).length() == 18);
  CHECK(z2.evaluate(nilpotent_spiral(2).expand()) == AbelianVector{6, 0});
  for (std::int64_t n = 2; n <= 6; ++n) {
    const Word w = nilpotent_spiral(n).expand();
    CHECK(z2.evaluate(w) == AbelianVector{2 * n * n - n, 0});
    const auto v = oracle::heis_eval(w);
    CHECK(h.evaluate(w) == HeisenbergTriple{v[0], v[1], v[2]});
  }
  CHECK_THROWS_AS(nilpotent_spiral(1), InvalidParameter);
}

TEST_CASE("commutator words") {
  const auto h = HeisenbergModel::standard();
  for (std::int64_t n = 1; n <= 5; ++n) CHECK(commutator_word(n, n * n).length() == static_cast<std::uint64_t>(2 * n + 2 * n * n));
  CHECK(commutator_word(1, 1).length() == 4);
  CHECK(h.evaluate(commutator_word(1, 1).expand()) == HeisenbergTriple{0, 0, 1});
  CHECK(h.evaluate(commutator_word(2, 4).expand()) == HeisenbergTriple{0, 0, 8});
}

TEST_CASE("BS sequences") {
  const auto s = bs_sequence(2, 3, 9);
  const std::vector<Integer> d{0, 1, 2, 3, 5, 8, 12, 18, 27, 41};
  CHECK(s.d == d);
  REQUIRE(s.x.size() >= 5);
  CHECK(s.x[0] == 2);
  CHECK(s.x[1] == 1);
  CHECK(s.x[2] == 0);
  CHECK(s.x[3] == 1);
  CHECK(s.x[4] == 1);
  for (std::size_t i = 1; i < s.x.size(); ++i) {
    CHECK(s.x[i] >= 0);
    CHECK(s.x[i] < 2);
  }
  const auto one = bs_sequence(1, 2, 12);
  for (std::size_t i = 1; i < one.d.size(); ++i) CHECK(one.d[i] == Integer(1) << (i - 1));
  // z_q >= (n/m)^q with exact arithmetic
  const auto big = bs_sequence(2, 3, 60);
  Rational ratio = 1;
  for (std::size_t q = 1; q <= 60; ++q) {
    ratio *= Rational(3, 2);
    CHECK(Rational(big.z[q]) >= ratio);
  }
  CHECK_THROWS_AS(bs_sequence(3, 2, 4), Error);
}

TEST_CASE("BS u and v displacements") {
  const BSParams p{2, 3};
  const auto& al = bs_alphabet();
  CHECK(bs_u(p, 1).expand() == parse_word("a^2 t^-1", al));
  for (auto params : {BSParams{2, 3}, BSParams{1, 2}, BSParams{2, 5}, BSParams{3, 4}}) {
    const auto s = bs_sequence(params.m, params.n, 12);
    for (std::int64_t q = 1; q <= 12; ++q) {
      CHECK(bs_normalize(cat(t_power(q), bs_u(params, q)), params) == bs_normalize(a_power(s.z[q]), params));
      CHECK(bs_normalize(cat(t_power(q), bs_v(params, q)), params) == bs_normalize(a_power(-s.z[q]), params));
    }
  }
}

TEST_CASE("BS w segments") {
  for (auto p : {BSParams{2, 3}, BSParams{1, 2}, BSParams{3, 5}}) {
    for (std::int64_t q = 1; q <= 6; ++q) {
      CHECK(bs_normalize(cat(bs_w_left(p, q), t_power(-q)), p) == bs_normalize(t_power(q), p));
      CHECK(bs_normalize(cat(t_power(-q), bs_w_right(p, q)), p) == bs_normalize(t_power(q), p));
      CHECK(bs_normalize(bs_w(p, q), p) == bs_normalize(t_power(3 * q), p));
    }
  }
  CHECK(bs_w({2, 3}, 1).length() == 29);
  CHECK(bs_w({2, 3}, 2).length() == 46);
  CHECK(bs_w({2, 3}, 3).length() == 63);
}

TEST_CASE("BS normal forms of u and conjugated v are syllable words") {
  const BSParams p{2, 3};
  const auto& al = bs_alphabet();
  const auto s = bs_sequence(2, 3, 10);
  for (std::int64_t q = 1; q <= 10; ++q) {
    const auto g = bs_normalize(bs_u(p, q), p);
    CHECK(g.tail_N == s.z[q]);
    CHECK(g.syllables.size() == static_cast<std::size_t>(q));
    CHECK(bs_is_canonical(g));
    auto c = bs_v(p, 2 * q);
    SegmentedWord a1;
    a1.push(kA);
    c.append(a1);
    c.append(bs_v(p, 2 * q).inverse(al));
    // literal words: freely reduced, every a-run bounded by m
    for (const auto& word : {bs_u(p, q), bs_v(p, q)}) {
      const Word e = word.expand();
      CHECK(free_reduce(e, al) == e);
      for (const auto& r : word.runs())
        if (r.letter == kA || r.letter == kAinv) CHECK(r.count <= static_cast<std::uint64_t>(p.m));
    }
    const auto h = bs_normalize(c, p);
    CHECK(bs_is_canonical(h));
    for (const auto& syl : h.syllables) CHECK(syl.a_exponent >= 0);
  }
}

TEST_CASE("BS negative n variant") {
  const BSParams p{2, -3};
  CHECK(bs_normalize(bs_w_negative(p, 1), p) == bs_normalize(t_power(6), p));
  const BSParams sq{4, 9};
  for (std::int64_t q = 1; q <= 3; ++q) {
    const auto w = bs_w_negative(p, q);
    std::uint64_t t_neg = 0, t_sq = 0;
    for (const auto& r : w.runs()) if (r.letter == kT || r.letter == kTinv) t_neg += r.count;
    for (const auto& r : bs_w(sq, q).runs()) if (r.letter == kT || r.letter == kTinv) t_sq += r.count;
    CHECK(t_neg == 2 * t_sq);
    CHECK(bs_normalize(w, p) == bs_normalize(t_power(6 * q), p));
  }
  CHECK_THROWS_AS(bs_w_negative({2, 3}, 1), InvalidParameter);
  const BSModel m12({1, -2});
  DistanceOracle o(m12);
  const Word w = bs_w_negative({1, -2}, 1).expand();
  const auto ml = min_lambda(w, 0, m12, o, MinLambdaMode::Cascade);
  CHECK_FALSE(ml.infinite);
  CHECK(check(w, ml.value, 0, m12, o).verdict == Verdict::Certified);
}

TEST_CASE("collecting in class two") {
  CHECK(verify_collecting_class2(1, 1));
  CHECK(verify_collecting_class2(3, 7));
  for (std::int64_t p = 1; p <= 10; ++p)
    for (std::int64_t q = 1; q <= 10; ++q) CHECK(verify_collecting_class2(p, q));
}

TEST_CASE("nilpotent spiral stays uniformly quasigeodesic") {
  const auto h = HeisenbergModel::standard();
  DistanceOracle o(h);
  std::vector<Rational> values;
  for (std::int64_t n = 2; n <= 4; ++n) {
    const auto r = min_lambda(nilpotent_spiral(n).expand(), 0, h, o, MinLambdaMode::Cascade);
    CHECK_FALSE(r.infinite);
    values.push_back(r.value);
  }
  CHECK(values[2] <= 2 * values[0]);
}

TEST_CASE("registry") {
  CHECK(family_names().size() == 7);
  for (const auto& name : family_names()) {
    FamilyArgs args;
    args.q = name == "nil-spiral" ? 2 : 1;
    args.bs = name == "bs-w-neg" ? BSParams{2, -3} : BSParams{2, 3};
    CHECK(make_family(name, args).length() > 0);
    CHECK_FALSE(family_group(name).empty());
  }
  CHECK_THROWS_AS(make_family("nope", FamilyArgs{}), InvalidParameter);
}
