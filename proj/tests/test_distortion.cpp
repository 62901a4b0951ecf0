#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qglab/distortion.hpp"
#include "qglab/errors.hpp"
#include "qglab/word_families.hpp"
#include "support/oracles.hpp"

using namespace qgl;

TEST_CASE("fit_exponent on exact power laws") {
  std::vector<std::pair<std::int64_t, std::int64_t>> sq, lin;
  for (std::int64_t x = 1; x <= 30; ++x) {
    sq.emplace_back(x, x * x);
    lin.emplace_back(x, 5 * x);
  }
  const auto f2 = fit_exponent(sq);
  CHECK(f2.exponent == doctest::Approx(2.0));
  CHECK(f2.points == 28);
  CHECK(f2.std_error == doctest::Approx(0.0));
  CHECK(fit_exponent(lin).exponent == doctest::Approx(1.0));
  CHECK(fit_exponent(lin).intercept == doctest::Approx(std::log(5.0)));
  CHECK_THROWS_AS(fit_exponent({{3, 1}}), InvalidParameter);
  CHECK_THROWS_AS(fit_exponent({{1, 1}, {2, 2}}), InvalidParameter);
}

TEST_CASE("undistorted identity embedding") {
  const auto z2 = AbelianModel::standard(2);
  const auto p = distortion_profile(z2, {Word{kA}, Word{kB}}, 12);
  REQUIRE(p.values.size() == 13);
  CHECK(p.values[0] == 0);
  for (std::size_t n = 0; n < p.values.size(); ++n) CHECK(p.values[n] == static_cast<std::int64_t>(n));
  REQUIRE(p.fit.has_value());
  CHECK(p.fit->exponent == doctest::Approx(1.0));
  const auto csv = p.to_csv();
  CHECK(csv.rfind("n,value\n", 0) == 0);
  CHECK(csv.find("\n12,12\n") != std::string::npos);
  CHECK(p.summary().find("exponent=") != std::string::npos);
}

TEST_CASE("cyclic subgroup undistorted with known constants") {
  // H = <a^2 b> in Z^2: d_G(h^k) = 3k, so Delta(n) = floor(n / 3)
  const auto z2 = AbelianModel::standard(2);
  const auto p = distortion_profile(z2, {Word{kA, kA, kB}}, 15);
  for (std::size_t n = 0; n < p.values.size(); ++n) {
    CHECK(p.values[n] == static_cast<std::int64_t>(n / 3));
    if (n) CHECK(p.values[n] >= p.values[n - 1]);
  }
}

TEST_CASE("Heisenberg center is quadratically distorted") {
  const auto h = HeisenbergModel::standard();
  const auto p = distortion_profile(h, {commutator_word(1, 1).expand()}, 16);
  CHECK(p.values[0] == 0);
  for (std::size_t n = 1; n < p.values.size(); ++n) CHECK(p.values[n] >= p.values[n - 1]);
  REQUIRE(p.fit.has_value());
  CHECK(p.fit->exponent >= 1.6);
  CHECK(p.fit->exponent <= 2.4);
  CHECK(kHeisenbergCenterWeight == 2);
}

TEST_CASE("center power distances") {
  const auto d = center_power_distance(40);
  REQUIRE(d.size() == 40);
  CHECK(d[0].first == 1);
  CHECK(d[0].second <= 4);
  auto eval = [](const Word& w) { return oracle::heis_eval(w); };
  CHECK(static_cast<std::int64_t>(*oracle::brute_distance(eval, std::array<long long, 3>{0, 0, 1}, 4, 6)) == d[0].second);
  CHECK(static_cast<std::int64_t>(*oracle::brute_distance(eval, std::array<long long, 3>{0, 0, 2}, 4, 7)) == d[1].second);
  for (std::size_t i = 1; i < d.size(); ++i) CHECK(d[i].second >= d[i - 1].second);
  for (std::size_t j = 0; j < d.size(); ++j)
    for (std::size_t k = 0; j + k + 1 < d.size(); ++k) CHECK(d[j + k + 1].second <= d[j].second + d[k].second);
}

TEST_CASE("commutator ratios") {
  const auto h = HeisenbergModel::standard();
  for (std::int64_t n = 1; n <= 3; ++n) {
    const Word w = commutator_word(n, n * n).expand();
    CHECK(w.size() == static_cast<std::size_t>(2 * n + 2 * n * n));
    CHECK(h.evaluate(w) == HeisenbergTriple{0, 0, n * n * n});
    DistanceOracle o(h);
    const auto d = o.distance(h.evaluate(w), static_cast<int>(w.size()));
    REQUIRE(d.is_exact());
    CHECK(commutator_ratio(n) * d.value == Rational(static_cast<long long>(w.size())));
  }
  CHECK(commutator_word(3, 9).length() == 24);
}

TEST_CASE("trace output") {
  const auto z2 = AbelianModel::standard(2);
  const auto proj = standard_projection(z2.alphabet());
  REQUIRE(proj.size() == 4);
  CHECK(proj[kA] == std::pair<std::int64_t, std::int64_t>{1, 0});
  CHECK(proj[kBinv] == std::pair<std::int64_t, std::int64_t>{0, -1});
  const auto dot = trace_dot(spiral_z2(1).expand(), z2.alphabet(), proj);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("->") != std::string::npos);
}
