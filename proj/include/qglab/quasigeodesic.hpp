#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qglab/alphabet.hpp"
#include "qglab/group_models.hpp"
#include "qglab/metric.hpp"
#include "qglab/numeric.hpp"

namespace qgl {

enum class Verdict { Certified, Violated, Inconclusive };

/// How one subword was settled.
enum class OracleTag : std::uint8_t { Trivial, Lookup, Projection, Analytic, Search, WordLength, None };

std::string to_string(Verdict v);
std::string to_string(OracleTag t);
Verdict parse_verdict(const std::string& s);

struct Violation {
  std::size_t start = 0;
  std::size_t end = 0;
  std::size_t subword_length = 0;
  /// Exact distance or a proven upper bound.
  DistanceBound bound;
  bool operator==(const Violation&) const = default;
};

struct QGReport {
  Verdict verdict = Verdict::Certified;
  Rational lambda = 1;
  Rational epsilon = 0;
  std::size_t word_length = 0;
  std::optional<Violation> violation;
  std::optional<Rational> min_lambda;
  bool min_lambda_infinite = false;
  std::size_t inconclusive = 0;
  /// One tag per examined subword, in scan order.
  std::vector<OracleTag> oracle_used;
  /// Tag histogram; filled by check and kept by parse.
  std::map<std::string, std::size_t> oracle_counts;

  /// key=value lines.
  std::string serialize() const;
  /// Inverse of serialize (oracle_used stays empty). Throws InvalidParameter.
  static QGReport parse(const std::string& text);
};

// Model hooks. The generic versions know nothing about the group.

template <CayleyModel M>
DistanceBound cheap_lower_bound(const M&, const typename M::Element&, const Word&, std::size_t, std::size_t) {
  return DistanceBound::lower(0, DistanceBound::Provenance::Projection);
}
template <CayleyModel M>
DistanceBound cheap_upper_bound(const M&, const typename M::Element&, std::size_t length) {
  return DistanceBound::upper(Rational(static_cast<long long>(length)), DistanceBound::Provenance::WordLength);
}

/// ℓ¹ norm for standard generators.
DistanceBound cheap_lower_bound(const AbelianModel& model, const AbelianVector& g, const Word& w, std::size_t start,
                                std::size_t end);
DistanceBound cheap_upper_bound(const AbelianModel& model, const AbelianVector& g, std::size_t length);
/// Best of |t-exponent sum|, bs_lower_bound and the prefix bound of w[start,end).
DistanceBound cheap_lower_bound(const BSModel& model, const BSNormalForm& g, const Word& w, std::size_t start,
                                std::size_t end);
/// min(|u|, length of the normal-form word).
DistanceBound cheap_upper_bound(const BSModel& model, const BSNormalForm& g, std::size_t length);

struct CheckOptions {
  bool analytic = true;
  bool search = true;
};

namespace detail {

template <CayleyModel M>
std::vector<typename M::Element> prefix_elements(const M& model, const Word& w, std::size_t start) {
  std::vector<typename M::Element> out;
  out.reserve(w.size() - start + 1);
  out.push_back(model.identity());
  for (std::size_t e = start; e < w.size(); ++e) {
    auto g = out.back();
    model.right_multiply(g, w[e]);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace detail

/// Decides whether every subword u satisfies |u| <= λ d(u) + ε. Subwords
/// are scanned by start ascending, then length descending; the first
/// violation found is reported. Budget exhaustion yields Inconclusive.
template <CayleyModel M>
QGReport check(const Word& w, const Rational& lambda, const Rational& epsilon, const M& model,
               DistanceOracle<M>& oracle, CheckOptions options = {}) {
  if (lambda < 1) throw InvalidParameter("lambda must be at least 1");
  if (epsilon < 0) throw InvalidParameter("epsilon must be nonnegative");
  QGReport report;
  report.lambda = lambda;
  report.epsilon = epsilon;
  report.word_length = w.size();
  auto tag = [&](OracleTag t) {
    report.oracle_used.push_back(t);
    ++report.oracle_counts[to_string(t)];
  };
  auto violate = [&](std::size_t s, std::size_t e, DistanceBound b, OracleTag t) {
    tag(t);
    report.verdict = Verdict::Violated;
    report.violation = Violation{s, e, e - s, std::move(b)};
  };

  const std::size_t L = w.size();
  for (std::size_t s = 0; s < L; ++s) {
    const auto prefix = detail::prefix_elements(model, w, s);
    for (std::size_t e = L; e > s; --e) {
      const std::size_t len = e - s;
      const Rational length(static_cast<long long>(len));
      if (length <= epsilon) {
        tag(OracleTag::Trivial);
        continue;
      }
      const auto& g = prefix[len];
      const Rational need = (length - epsilon) / lambda;  // violated iff d < need
      if (model.is_identity(g)) {
        violate(s, e, DistanceBound::exact(0, DistanceBound::Provenance::BFS), OracleTag::Lookup);
        return report;
      }
      if (need <= 1) {
        tag(OracleTag::Trivial);
        continue;
      }
      if (auto d = oracle.lookup(g)) {
        if (Rational(*d) < need) {
          violate(s, e, DistanceBound::exact(*d, DistanceBound::Provenance::BFS), OracleTag::Lookup);
          return report;
        }
        tag(OracleTag::Lookup);
        continue;
      }
      DistanceBound lb = oracle.ball_bound(g);
      if (options.analytic) {
        auto c = cheap_lower_bound(model, g, w, s, e);
        if (c.value > lb.value) lb = c;
      }
      if (lb.value >= need) {
        tag(lb.provenance == DistanceBound::Provenance::BSAnalytic ? OracleTag::Analytic
            : lb.provenance == DistanceBound::Provenance::Projection ? OracleTag::Projection
                                                                      : OracleTag::Lookup);
        continue;
      }
      if (options.search) {
        const Integer c = ceil(need) - 1;
        try {
          auto r = oracle.distance(g, static_cast<int>(to_int64(c)));
          if (r.is_exact()) {
            violate(s, e, r, OracleTag::Search);
            return report;
          }
          tag(OracleTag::Search);
          continue;
        } catch (const BudgetExceeded&) {
        }
      }
      auto ub = cheap_upper_bound(model, g, len);
      if (ub.value < need) {
        violate(s, e, ub, OracleTag::WordLength);
        return report;
      }
      tag(OracleTag::None);
      ++report.inconclusive;
    }
  }
  report.verdict = report.inconclusive == 0 ? Verdict::Certified : Verdict::Inconclusive;
  return report;
}

struct MinLambdaResult {
  bool infinite = false;
  /// Smallest λ >= 1 making w (λ,ε)-quasigeodesic, or a certified upper
  /// bound on it when `exact` is false.
  Rational value = 1;
  bool exact = true;
  std::size_t unresolved = 0;
};

enum class MinLambdaMode { Exact, Cascade };

/// max (|u| - ε)/d(u) over subwords, clamped below by 1. Exact mode throws
/// BudgetExceeded if some needed distance is out of reach; Cascade mode
/// falls back to lower bounds and reports exact = false.
template <CayleyModel M>
MinLambdaResult min_lambda(const Word& w, const Rational& epsilon, const M& model, DistanceOracle<M>& oracle,
                           MinLambdaMode mode = MinLambdaMode::Exact) {
  if (epsilon < 0) throw InvalidParameter("epsilon must be nonnegative");
  struct Pending {
    Rational upper;
    Rational excess;
    std::size_t len;
    typename M::Element g;
  };
  MinLambdaResult result;
  Rational best = 1;
  std::vector<Pending> pending;
  const std::size_t L = w.size();
  for (std::size_t s = 0; s < L; ++s) {
    const auto prefix = detail::prefix_elements(model, w, s);
    for (std::size_t e = s + 1; e <= L; ++e) {
      const std::size_t len = e - s;
      const Rational excess = Rational(static_cast<long long>(len)) - epsilon;
      if (excess <= 0) continue;
      const auto& g = prefix[len];
      if (model.is_identity(g)) {
        result.infinite = true;
        result.exact = true;
        return result;
      }
      if (auto d = oracle.lookup(g)) {
        best = std::max(best, Rational(excess / *d));
        continue;
      }
      DistanceBound lb = oracle.ball_bound(g);
      auto c = cheap_lower_bound(model, g, w, s, e);
      if (c.value > lb.value) lb = c;
      const Rational denom = std::max(lb.value, Rational(1));
      pending.push_back({excess / denom, excess, len, g});
    }
  }
  std::stable_sort(pending.begin(), pending.end(),
                   [](const Pending& a, const Pending& b) { return a.upper > b.upper; });
  Rational fallback = 1;
  for (auto& p : pending) {
    if (p.upper <= best) break;
    try {
      auto r = oracle.distance(p.g, static_cast<int>(p.len));
      if (!r.is_exact()) throw InvalidParameter("distance exceeds word length");
      best = std::max(best, Rational(p.excess / r.value));
    } catch (const BudgetExceeded&) {
      if (mode == MinLambdaMode::Exact) throw;
      ++result.unresolved;
      fallback = std::max(fallback, p.upper);
    }
  }
  result.exact = result.unresolved == 0 || fallback <= best;
  result.value = std::max(best, fallback);
  return result;
}

}  // namespace qgl
