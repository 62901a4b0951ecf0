#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qglab/alphabet.hpp"
#include "qglab/group_models.hpp"
#include "qglab/metric.hpp"
#include "qglab/numeric.hpp"

namespace qgl {

struct ExponentFit {
  double exponent = 0;
  double intercept = 0;
  double std_error = 0;
  std::size_t points = 0;
  /// exponent -/+ 1.96 standard errors
  double ci_low() const { return exponent - 1.96 * std_error; }
  double ci_high() const { return exponent + 1.96 * std_error; }
};

/// Least squares on (log x, log y) for x >= min_x and y > 0. Needs two points.
ExponentFit fit_exponent(const std::vector<std::pair<std::int64_t, std::int64_t>>& points, std::int64_t min_x = 3);

struct DistortionProfile {
  std::vector<std::int64_t> radii;
  std::vector<std::int64_t> values;
  std::optional<ExponentFit> fit;

  /// `n,value` rows after a header line.
  std::string to_csv() const;
  /// key=value summary lines.
  std::string summary() const;
};

/// Δ(n) = max d_H(h) over h in H with d_G(h) <= n, for n = 0..n_max. The
/// H-ball is grown until three consecutive spheres miss the G-ball.
/// Throws BudgetExceeded.
template <CayleyModel M>
DistortionProfile distortion_profile(const M& model, const std::vector<Word>& h_generators, int n_max,
                                     std::size_t node_budget = kDefaultNodeBudget) {
  if (n_max < 0) throw InvalidParameter("n_max must be nonnegative");
  if (h_generators.empty()) throw InvalidParameter("need at least one subgroup generator");
  const auto ball = bfs_ball(model, n_max, node_budget);

  std::vector<typename M::Element> gens;
  for (const auto& w : h_generators) {
    auto g = model.identity();
    for (Letter l : w) model.right_multiply(g, l);
    gens.push_back(g);
    gens.push_back(model.inverse(g));
  }
  std::vector<std::int64_t> best(static_cast<std::size_t>(n_max) + 1, 0);
  std::unordered_set<typename M::Key, typename M::KeyHash> seen{model.key(model.identity())};
  std::vector<typename M::Element> sphere{model.identity()};
  int misses = 0;
  for (std::int64_t dh = 1; misses < 3 && !sphere.empty(); ++dh) {
    std::vector<typename M::Element> next;
    bool hit = false;
    for (const auto& x : sphere)
      for (const auto& s : gens) {
        auto y = model.multiply(x, s);
        auto k = model.key(y);
        if (!seen.insert(k).second) continue;
        if (seen.size() > node_budget) throw BudgetExceeded("subgroup ball exceeded the node budget", next.size());
        if (auto dg = ball.find(k)) {
          hit = true;
          auto& b = best[static_cast<std::size_t>(*dg)];
          b = std::max(b, dh);
        }
        next.push_back(std::move(y));
      }
    misses = hit ? 0 : misses + 1;
    sphere = std::move(next);
  }

  DistortionProfile profile;
  std::int64_t running = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> points;
  for (int n = 0; n <= n_max; ++n) {
    running = std::max(running, best[static_cast<std::size_t>(n)]);
    profile.radii.push_back(n);
    profile.values.push_back(running);
    points.emplace_back(n, running);
  }
  try {
    profile.fit = fit_exponent(points);
  } catch (const InvalidParameter&) {
  }
  return profile;
}

/// Exact d((0,0,k)) for k = 1..k_max in the standard Heisenberg group.
std::vector<std::pair<std::int64_t, std::int64_t>> center_power_distance(std::int64_t k_max,
                                                                          std::size_t node_budget = kDefaultNodeBudget);

/// (2n + 2n²) / d([a^n, b^{n²}]) in the standard Heisenberg group.
Rational commutator_ratio(std::int64_t n);

/// DOT graph of the path traced by w after projecting letters to ℤ².
/// `projection` holds one (dx, dy) per letter.
std::string trace_dot(const Word& w, const GeneratorAlphabet& alphabet,
                      const std::vector<std::pair<std::int64_t, std::int64_t>>& projection);

/// Letter projections: z2 and heisenberg use a -> (1,0), b -> (0,1); bs uses
/// a -> (1,0), t -> (0,1).
std::vector<std::pair<std::int64_t, std::int64_t>> standard_projection(const GeneratorAlphabet& alphabet);

/// Documentation constants for the Heisenberg instance: the center lies in
/// the second term of the lower central series and has weight 2.
inline constexpr int kHeisenbergCenterWeight = 2;

}  // namespace qgl
