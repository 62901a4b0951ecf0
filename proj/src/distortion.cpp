#include "qglab/distortion.hpp"

#include <cmath>
#include <sstream>

namespace qgl {

ExponentFit fit_exponent(const std::vector<std::pair<std::int64_t, std::int64_t>>& points, std::int64_t min_x) {
  std::vector<double> xs, ys;
  for (const auto& [x, y] : points) {
    if (x < min_x || y <= 0) continue;
    xs.push_back(std::log(static_cast<double>(x)));
    ys.push_back(std::log(static_cast<double>(y)));
  }
  const auto n = xs.size();
  if (n < 2) throw InvalidParameter("need at least two usable points for a fit");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0) throw InvalidParameter("fit needs two distinct x values");
  ExponentFit fit;
  fit.exponent = sxy / sxx;
  fit.intercept = my - fit.exponent * mx;
  fit.points = n;
  if (n > 2) {
    double rss = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = ys[i] - fit.intercept - fit.exponent * xs[i];
      rss += r * r;
    }
    fit.std_error = std::sqrt(rss / static_cast<double>(n - 2) / sxx);
  }
  return fit;
}

std::string DistortionProfile::to_csv() const {
  std::ostringstream out;
  out << "n,value\n";
  for (std::size_t i = 0; i < radii.size(); ++i) out << radii[i] << "," << values[i] << "\n";
  return out.str();
}

std::string DistortionProfile::summary() const {
  std::ostringstream out;
  out << "radii=" << radii.size() << "\n";
  if (!values.empty()) out << "max_value=" << values.back() << "\n";
  if (fit) {
    out << "exponent=" << fit->exponent << "\n";
    out << "ci_low=" << fit->ci_low() << "\n";
    out << "ci_high=" << fit->ci_high() << "\n";
    out << "fit_points=" << fit->points << "\n";
  }
  return out.str();
}

namespace {

// Length of a product of commutators [a^s, b^s] spelling (0,0,k).
std::int64_t center_upper_bound(std::int64_t k) {
  std::int64_t len = 0;
  while (k > 0) {
    auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(k)));
    while (s * s > k) --s;
    while ((s + 1) * (s + 1) <= k) ++s;
    len += 4 * s;
    k -= s * s;
  }
  return len;
}

}  // namespace

std::vector<std::pair<std::int64_t, std::int64_t>> center_power_distance(std::int64_t k_max,
                                                                          std::size_t node_budget) {
  if (k_max < 1) throw InvalidParameter("k_max must be at least 1");
  const auto model = HeisenbergModel::standard();
  DistanceOracle<HeisenbergModel>::Options opts;
  opts.forward_budget = node_budget;
  DistanceOracle<HeisenbergModel> oracle(model, opts);
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t k = 1; k <= k_max; ++k) {
    const HeisenbergTriple g{0, 0, k};
    auto d = oracle.distance(g, static_cast<int>(center_upper_bound(k)));
    if (!d.is_exact()) throw BudgetExceeded("no exact distance for the central power", 0);
    out.emplace_back(k, to_int64(numerator(d.value)));
  }
  return out;
}

Rational commutator_ratio(std::int64_t n) {
  if (n < 1) throw InvalidParameter("n must be at least 1");
  const auto model = HeisenbergModel::standard();
  DistanceOracle<HeisenbergModel> oracle(model);
  const HeisenbergTriple g{0, 0, Integer(n) * n * n};
  auto d = oracle.distance(g, static_cast<int>(2 * n + 2 * n * n));
  if (!d.is_exact()) throw BudgetExceeded("commutator distance out of reach", 0);
  return Rational(2 * n + 2 * n * n) / d.value;
}

std::vector<std::pair<std::int64_t, std::int64_t>> standard_projection(const GeneratorAlphabet& alphabet) {
  std::vector<std::pair<std::int64_t, std::int64_t>> p(alphabet.size(), {0, 0});
  for (Letter l = 0; l < alphabet.size(); ++l) {
    const auto g = alphabet.generator(l);
    const std::int64_t sign = alphabet.is_inverse_letter(l) ? -1 : 1;
    if (g == 0) p[l] = {sign, 0};
    if (g == 1) p[l] = {0, sign};
  }
  return p;
}

std::string trace_dot(const Word& w, const GeneratorAlphabet& alphabet,
                      const std::vector<std::pair<std::int64_t, std::int64_t>>& projection) {
  if (projection.size() != alphabet.size()) throw InvalidParameter("projection needs one vector per letter");
  std::ostringstream out;
  out << "digraph trace {\n  node [shape=point];\n";
  std::int64_t x = 0, y = 0;
  out << "  v0 [pos=\"0,0!\", shape=circle, label=\"\"];\n";
  for (std::size_t i = 0; i < w.size(); ++i) {
    x += projection.at(w[i]).first;
    y += projection.at(w[i]).second;
    out << "  v" << i + 1 << " [pos=\"" << x << "," << y << "!\"];\n";
  }
  for (std::size_t i = 0; i < w.size(); ++i)
    out << "  v" << i << " -> v" << i + 1 << " [label=\"" << alphabet.token(w[i]) << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace qgl
