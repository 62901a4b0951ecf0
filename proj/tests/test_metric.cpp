#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qglab/errors.hpp"
#include "qglab/metric.hpp"
#include "qglab/word_families.hpp"
#include "support/oracles.hpp"

using namespace qgl;

namespace {

// sphere sizes by plain word enumeration
template <class M>
std::vector<std::size_t> enumerated_spheres(const M& model, std::size_t R) {
  std::unordered_map<typename M::Key, std::size_t, typename M::KeyHash> best;
  for (std::size_t n = 0; n <= R; ++n)
    for (const auto& w : oracle::all_words(model.alphabet().size(), n)) best.try_emplace(model.key(model.evaluate(w)), n);
  std::vector<std::size_t> out(R + 1);
  for (const auto& [k, d] : best) ++out[d];
  return out;
}

Rational bound_of(const DistanceBound& b) { return b.value; }

}  // namespace

TEST_CASE("ball examples") {
  const auto z2 = AbelianModel::standard(2);
  CHECK(bfs_ball(z2, 2).size() == 13);
  const auto b0 = bfs_ball(z2, 0);
  CHECK(b0.size() == 1);
  CHECK(b0.find(z2.key(z2.identity())) == 0);
  const auto h = HeisenbergModel::standard();
  CHECK(bfs_ball(h, 5).size() == [&] {
    auto s = enumerated_spheres(h, 5);
    std::size_t t = 0;
    for (auto c : s) t += c;
    return t;
  }());
  CHECK_THROWS_AS(bfs_ball(h, 10, 1000), BudgetExceeded);
}

TEST_CASE("growth counts") {
  const auto z2 = AbelianModel::standard(2);
  CHECK(growth_counts(z2, 4) == std::vector<std::size_t>{1, 4, 8, 12, 16});
  CHECK(growth_counts(HeisenbergModel::standard(), 5) == enumerated_spheres(HeisenbergModel::standard(), 5));
  const BSModel bs({2, 3});
  CHECK(growth_counts(bs, 5) == enumerated_spheres(bs, 5));
}

TEST_CASE("export_ball format") {
  const auto z2 = AbelianModel::standard(2);
  const std::string text = export_ball(z2, bfs_ball(z2, 1));
  CHECK(std::count(text.begin(), text.end(), '\n') == 5);
  CHECK(text.find(" 0\n") != std::string::npos);
}

TEST_CASE("distance examples") {
  const auto z2 = AbelianModel::standard(2);
  DistanceOracle o(z2);
  CHECK(o.distance(z2.identity(), 10).value == 0);
  CHECK(o.distance(z2.identity(), 10).is_exact());
  CHECK(o.distance(AbelianVector{3, 0}, 10).value == 3);
  CHECK(o.distance(AbelianVector{3, 0}, 10).is_exact());
  const auto lb = o.distance(AbelianVector{5, 5}, 4);
  CHECK(lb.kind == DistanceBound::Kind::LowerBound);
  CHECK(lb.value == 5);

  const BSModel bs12({1, 2});
  const auto a8 = bs12.evaluate(parse_word("a^8", bs12.alphabet()));
  CHECK(bs12.evaluate(parse_word("t^2 a^2 t^-2", bs12.alphabet())) == a8);
  const auto ball = bfs_ball(bs12, 8);
  const auto full = ball.find(bs12.key(a8));
  REQUIRE(full.has_value());
  CHECK(*full <= 6);
  DistanceOracle ob(bs12);
  CHECK(ob.distance(a8, 8).value == *full);
}

TEST_CASE("lookup and ball_bound never search") {
  const auto h = HeisenbergModel::standard();
  DistanceOracle o(h);
  o.prepare_forward(3);
  const HeisenbergTriple far{0, 0, 8};
  CHECK(o.ball_bound(far).kind == DistanceBound::Kind::LowerBound);
  CHECK(o.ball_bound(far).value == 4);
  CHECK_FALSE(o.lookup(far).has_value());
  CHECK(o.lookup(HeisenbergTriple{1, 1, 0}).has_value());
}

TEST_CASE("Heisenberg distances against brute force") {
  const auto h = HeisenbergModel::standard();
  DistanceOracle o(h);
  auto eval = [](const Word& w) { return oracle::heis_eval(w); };
  for (long long z = 0; z <= 4; ++z) {
    const auto d = oracle::brute_distance(eval, std::array<long long, 3>{0, 0, z}, 4, 8);
    REQUIRE(d.has_value());
    CHECK(o.distance(HeisenbergTriple{0, 0, z}, 20).value == static_cast<long long>(*d));
  }
}

TEST_CASE("property: bidirectional equals full BFS, symmetry, triangle") {
  std::mt19937_64 rng(8);
  auto run = [&rng](const auto& model) {
    using M = std::decay_t<decltype(model)>;
    const auto ball = bfs_ball(model, 8);
    typename DistanceOracle<M>::Options opt;
    opt.max_forward_radius = 3;
    DistanceOracle<M> o(model, opt);
    for (int i = 0; i < 500; ++i) {
      const Word w = oracle::random_word(rng, model.alphabet().size(), 8);
      const auto g = model.evaluate(w);
      const auto full = ball.find(model.key(g));
      REQUIRE(full.has_value());
      const auto d = o.distance(g, 8);
      CHECK(d.is_exact());
      CHECK(d.value == *full);
      CHECK(*ball.find(model.key(model.inverse(g))) == *full);
    }
    for (int i = 0; i < 300; ++i) {
      const auto g = model.evaluate(oracle::random_word(rng, model.alphabet().size(), 4));
      const auto k = model.evaluate(oracle::random_word(rng, model.alphabet().size(), 4));
      CHECK(*ball.find(model.key(model.multiply(g, k))) <= *ball.find(model.key(g)) + *ball.find(model.key(k)));
    }
  };
  run(AbelianModel::standard(2));
  run(HeisenbergModel::standard());
  run(BSModel({2, 3}));
  run(BSModel({1, 2}));
}

TEST_CASE("BS lower bound") {
  const BSModel bs({2, 3});
  CHECK(bs_lower_bound(bs.identity()).value == 0);
  CHECK(bs_lower_bound(bs.evaluate(parse_word("a^8", bs.alphabet()))).value == 0);
  CHECK(bs_lower_bound(bs.identity()).provenance == DistanceBound::Provenance::BSAnalytic);
  const auto ball = bfs_ball(bs, 8);
  for (const auto& w : oracle::all_words(4, 6)) {
    const auto g = bs.evaluate(w);
    CHECK(bound_of(bs_lower_bound(g)) <= *ball.find(bs.key(g)));
  }
  // huge tails keep a finite, growing bound
  BSNormalForm big = bs.identity();
  bs_push_a(big, Integer(1) << 400);
  CHECK(bs_lower_bound(big).value > 10);
  const BSModel neg({2, -3});
  CHECK(bs_lower_bound(neg.evaluate(parse_word("t^5", neg.alphabet()))).value == 0);
}

TEST_CASE("BS prefix bound") {
  const BSParams p{2, 3};
  const BSModel bs(p);
  CHECK(bs_prefix_lower_bound(0, Word{}, p).value == 0);
  CHECK_THROWS_AS(bs_prefix_lower_bound(0, parse_word("t a", bs.alphabet()), p), InvalidParameter);
  const auto seq = bs_sequence(2, 3, 121);
  Rational prev = -1;
  for (std::int64_t q = 1; q <= 120; q += (q < 6 ? 1 : 19)) {
    // syllable part of the normal form of v_q
    auto g = bs_normalize(bs_v(p, q), p);
    g.tail_N = 0;
    const auto b = bs_prefix_lower_bound(seq.z[q], to_word(g), p);
    CHECK(b.value >= prev);
    prev = b.value;
  }
  CHECK(prev > 0);
  const auto ball = bfs_ball(bs, 9);
  std::size_t defined = 0;
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& u : oracle::all_words(4, n)) {
      const auto b = bs_prefix_bound_of_word(u, p);
      if (!b) continue;
      ++defined;
      const auto d = ball.find(bs.key(bs.evaluate(u)));
      REQUIRE(d.has_value());
      CHECK(b->value <= *d);
    }
  CHECK(defined > 100);
}

TEST_CASE("distance bound names round trip") {
  using K = DistanceBound::Kind;
  using P = DistanceBound::Provenance;
  for (auto k : {K::Exact, K::LowerBound, K::UpperBound}) CHECK(parse_kind(to_string(k)) == k);
  for (auto p : {P::BFS, P::Bidirectional, P::BSAnalytic, P::WordLength, P::Projection})
    CHECK(parse_provenance(to_string(p)) == p);
}

TEST_CASE("ball stays complete after a budget refusal") {
  const auto h = HeisenbergModel::standard();
  BallBuilder<HeisenbergModel> b(h, 60);
  CHECK_THROWS_AS(b.grow_to(6), BudgetExceeded);
  const int r = b.radius();
  const auto full = bfs_ball(h, r);
  CHECK(b.ball().size() == full.size());
  BallBuilder<HeisenbergModel> c(h, 60);
  c.grow_to(r);
  CHECK_THROWS_AS(c.grow_to(r + 1), BudgetExceeded);
  CHECK(c.ball().size() == full.size());
}
