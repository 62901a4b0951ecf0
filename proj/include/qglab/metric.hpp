#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "qglab/alphabet.hpp"
#include "qglab/errors.hpp"
#include "qglab/group_models.hpp"
#include "qglab/numeric.hpp"

namespace qgl {

/// What a Cayley-graph search needs from a group: an identity, right
/// multiplication by a letter, and an exact canonical key per element.
template <class M>
concept CayleyModel = requires(const M& model, typename M::Element& g, const typename M::Element& c, Letter l,
                               const typename M::Key& k) {
  { model.alphabet() } -> std::convertible_to<const GeneratorAlphabet&>;
  { model.identity() } -> std::same_as<typename M::Element>;
  model.right_multiply(g, l);
  { model.key(c) } -> std::same_as<typename M::Key>;
  { model.describe(k) } -> std::convertible_to<std::string>;
  { model.is_identity(c) } -> std::same_as<bool>;
  typename M::KeyHash;
};

/// A certified statement about a word-metric distance.
struct DistanceBound {
  enum class Kind { Exact, LowerBound, UpperBound };
  enum class Provenance { BFS, Bidirectional, BSAnalytic, WordLength, Projection };

  Kind kind = Kind::Exact;
  Rational value = 0;
  Provenance provenance = Provenance::BFS;

  static DistanceBound exact(std::int64_t d, Provenance p) { return {Kind::Exact, Rational(d), p}; }
  static DistanceBound lower(Rational v, Provenance p) { return {Kind::LowerBound, std::move(v), p}; }
  static DistanceBound upper(Rational v, Provenance p) { return {Kind::UpperBound, std::move(v), p}; }

  bool is_exact() const { return kind == Kind::Exact; }
  /// Usable as a lower bound (Exact or LowerBound).
  bool bounds_below() const { return kind != Kind::UpperBound; }
  bool bounds_above() const { return kind != Kind::LowerBound; }
  bool operator==(const DistanceBound&) const = default;
};

std::string to_string(DistanceBound::Kind k);
std::string to_string(DistanceBound::Provenance p);
DistanceBound::Kind parse_kind(const std::string& s);
DistanceBound::Provenance parse_provenance(const std::string& s);

inline constexpr std::size_t kDefaultNodeBudget = 5'000'000;

template <CayleyModel M>
struct Ball {
  int radius = 0;
  std::unordered_map<typename M::Key, int, typename M::KeyHash> table;

  std::size_t size() const { return table.size(); }
  std::optional<int> find(const typename M::Key& k) const {
    auto it = table.find(k);
    if (it == table.end()) return std::nullopt;
    return it->second;
  }
};

/// Lines `<encoding> <distance>`, sorted by encoding.
template <CayleyModel M>
std::string export_ball(const M& model, const Ball<M>& ball) {
  std::vector<std::pair<std::string, int>> rows;
  rows.reserve(ball.size());
  for (const auto& [k, d] : ball.table) rows.emplace_back(model.describe(k), d);
  std::sort(rows.begin(), rows.end());
  std::string out;
  for (const auto& [e, d] : rows) out += e + " " + std::to_string(d) + "\n";
  return out;
}

/// Breadth-first ball around the identity that can be grown level by level.
template <CayleyModel M>
class BallBuilder {
 public:
  using Element = typename M::Element;

  BallBuilder(const M& model, std::size_t node_budget = kDefaultNodeBudget)
      : model_(&model), budget_(node_budget) {
    Element e = model.identity();
    ball_.table.emplace(model.key(e), 0);
    frontier_.push_back(std::move(e));
  }

  const Ball<M>& ball() const { return ball_; }
  int radius() const { return ball_.radius; }
  const std::vector<Element>& frontier() const { return frontier_; }

  /// Throws BudgetExceeded if the ball would exceed the node budget.
  void grow_to(int radius) {
    const auto letters = model_->alphabet().size();
    while (ball_.radius < radius) {
      std::vector<Element> next;
      const int d = ball_.radius + 1;
      for (const auto& g : frontier_) {
        for (Letter l = 0; l < letters; ++l) {
          Element h = g;
          model_->right_multiply(h, l);
          if (ball_.table.try_emplace(model_->key(h), d).second) {
            next.push_back(std::move(h));
            if (ball_.table.size() > budget_) {
              // drop the partial level so the ball stays complete
              const auto frontier = next.size();
              for (const auto& x : next) ball_.table.erase(model_->key(x));
              throw BudgetExceeded("BFS node budget " + std::to_string(budget_) + " exceeded at radius " +
                                       std::to_string(d),
                                   frontier);
            }
          }
        }
      }
      frontier_ = std::move(next);
      ball_.radius = d;
    }
  }

  /// Grows until `done()` holds or the radius limit is reached.
  template <class Pred>
  void grow_until(Pred done, int radius_limit) {
    while (!done() && ball_.radius < radius_limit) grow_to(ball_.radius + 1);
  }

 private:
  const M* model_;
  std::size_t budget_;
  Ball<M> ball_;
  std::vector<Element> frontier_;
};

template <CayleyModel M>
Ball<M> bfs_ball(const M& model, int radius, std::size_t node_budget = kDefaultNodeBudget) {
  if (radius < 0) throw InvalidParameter("radius must be nonnegative");
  BallBuilder<M> builder(model, node_budget);
  builder.grow_to(radius);
  return builder.ball();
}

/// Sphere sizes |S(r)| for r = 0..R.
template <CayleyModel M>
std::vector<std::size_t> growth_counts(const M& model, int R, std::size_t node_budget = kDefaultNodeBudget) {
  auto ball = bfs_ball(model, R, node_budget);
  std::vector<std::size_t> spheres(static_cast<std::size_t>(R) + 1, 0);
  for (const auto& [k, d] : ball.table) ++spheres[static_cast<std::size_t>(d)];
  return spheres;
}

/// Exact word-metric distances with a cached forward ball and per-query
/// backward search (meet in the middle). Results are memoized by key.
template <CayleyModel M>
class DistanceOracle {
 public:
  using Element = typename M::Element;
  using Key = typename M::Key;

  struct Options {
    std::size_t forward_budget = kDefaultNodeBudget;
    std::size_t backward_budget = 200'000;
    /// Cap on the cached forward radius; backward search covers the rest.
    int max_forward_radius = 1 << 20;
  };

  explicit DistanceOracle(const M& model) : DistanceOracle(model, Options{}) {}
  DistanceOracle(const M& model, Options options)
      : model_(&model), options_(options), forward_(model, options.forward_budget) {}

  const M& model() const { return *model_; }
  int forward_radius() const { return forward_.radius(); }

  /// Grow the cached ball; stops quietly at the budget.
  void prepare_forward(int radius) {
    std::lock_guard lock(mutex_);
    grow_forward_locked(radius);
  }

  /// Exact if found within the ball, never searches.
  std::optional<int> lookup(const Element& g) const {
    std::lock_guard lock(mutex_);
    Key k = model_->key(g);
    if (auto d = forward_.ball().find(k)) return d;
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    return std::nullopt;
  }

  /// Sound lower bound from the cached ball alone: radius + 1 when absent.
  DistanceBound ball_bound(const Element& g) const {
    if (auto d = lookup(g)) return DistanceBound::exact(*d, DistanceBound::Provenance::BFS);
    std::lock_guard lock(mutex_);
    return DistanceBound::lower(Rational(forward_.radius() + 1), DistanceBound::Provenance::BFS);
  }

  /// Exact distance when d(g) <= radius_cap, else LowerBound radius_cap + 1.
  /// Throws BudgetExceeded if the backward search outgrows its budget.
  DistanceBound distance(const Element& g, int radius_cap) {
    std::lock_guard lock(mutex_);
    const Key key = model_->key(g);
    if (auto d = forward_.ball().find(key)) return DistanceBound::exact(*d, DistanceBound::Provenance::BFS);
    if (auto it = memo_.find(key); it != memo_.end())
      return DistanceBound::exact(it->second, DistanceBound::Provenance::Bidirectional);
    if (forward_.radius() >= radius_cap)
      return DistanceBound::lower(Rational(radius_cap + 1), DistanceBound::Provenance::BFS);

    grow_forward_locked(std::min((radius_cap + 1) / 2, options_.max_forward_radius));
    if (auto d = forward_.ball().find(key)) return DistanceBound::exact(*d, DistanceBound::Provenance::BFS);
    const int rf = forward_.radius();
    if (rf >= radius_cap) return DistanceBound::lower(Rational(radius_cap + 1), DistanceBound::Provenance::BFS);

    // Level k of the backward search holds elements at distance k from g.
    // The first level meeting the forward ball is d(g) - rf.
    std::unordered_set<Key, typename M::KeyHash> seen{key};
    std::vector<Element> level{g};
    const auto letters = model_->alphabet().size();
    for (int k = 1; k <= radius_cap - rf; ++k) {
      std::vector<Element> next;
      std::optional<int> best;
      for (const auto& x : level) {
        for (Letter l = 0; l < letters; ++l) {
          Element y = x;
          model_->right_multiply(y, l);
          Key yk = model_->key(y);
          if (!seen.insert(yk).second) continue;
          if (auto df = forward_.ball().find(yk)) {
            const int cand = k + *df;
            if (!best || cand < *best) best = cand;
          }
          next.push_back(std::move(y));
          if (seen.size() > options_.backward_budget)
            throw BudgetExceeded("backward search budget exceeded at level " + std::to_string(k), next.size());
        }
      }
      if (best) {
        memo_.emplace(key, *best);
        return DistanceBound::exact(*best, DistanceBound::Provenance::Bidirectional);
      }
      level = std::move(next);
    }
    return DistanceBound::lower(Rational(radius_cap + 1), DistanceBound::Provenance::Bidirectional);
  }

 private:
  void grow_forward_locked(int radius) {
    try {
      forward_.grow_to(radius);
    } catch (const BudgetExceeded&) {
      // The ball stays at its last complete radius.
    }
  }

  const M* model_;
  Options options_;
  BallBuilder<M> forward_;
  std::unordered_map<Key, int, typename M::KeyHash> memo_;
  mutable std::mutex mutex_;
};

/// Lower bound max(0, C(|w| + log_{n/m}(|N|+1)) - D), C = 1/(n+1),
/// D = log_{n/m}(mn/(n-m)). Requires n > m >= 1; otherwise returns 0.
DistanceBound bs_lower_bound(const BSNormalForm& g);

/// Lower bound for a^{N'} w with w a pinch-free syllable word (no tail):
/// C1|w| + C2 log(1 + (m/n)^T |N'|) - D1 with C1 = 1/(n(n+1)),
/// C2 = 1/((n+1)|log(n/m)|), T the number of t-letters in w.
/// Throws InvalidParameter if w is not a syllable word.
DistanceBound bs_prefix_lower_bound(const Integer& leading_power, const Word& w, const BSParams& params);

/// Splits u = a^{N'} w with w a syllable word if possible and returns the
/// prefix bound, otherwise nullopt.
std::optional<DistanceBound> bs_prefix_bound_of_word(const Word& u, const BSParams& params);

}  // namespace qgl
