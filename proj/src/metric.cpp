#include "qglab/metric.hpp"

#include <cmath>

namespace qgl {

std::string to_string(DistanceBound::Kind k) {
  switch (k) {
    case DistanceBound::Kind::Exact: return "Exact";
    case DistanceBound::Kind::LowerBound: return "LowerBound";
    case DistanceBound::Kind::UpperBound: return "UpperBound";
  }
  return "?";
}

std::string to_string(DistanceBound::Provenance p) {
  switch (p) {
    case DistanceBound::Provenance::BFS: return "BFS";
    case DistanceBound::Provenance::Bidirectional: return "Bidirectional";
    case DistanceBound::Provenance::BSAnalytic: return "BSAnalytic";
    case DistanceBound::Provenance::WordLength: return "WordLength";
    case DistanceBound::Provenance::Projection: return "Projection";
  }
  return "?";
}

DistanceBound::Kind parse_kind(const std::string& s) {
  if (s == "Exact") return DistanceBound::Kind::Exact;
  if (s == "LowerBound") return DistanceBound::Kind::LowerBound;
  if (s == "UpperBound") return DistanceBound::Kind::UpperBound;
  throw InvalidParameter("unknown bound kind '" + s + "'");
}

DistanceBound::Provenance parse_provenance(const std::string& s) {
  if (s == "BFS") return DistanceBound::Provenance::BFS;
  if (s == "Bidirectional") return DistanceBound::Provenance::Bidirectional;
  if (s == "BSAnalytic") return DistanceBound::Provenance::BSAnalytic;
  if (s == "WordLength") return DistanceBound::Provenance::WordLength;
  if (s == "Projection") return DistanceBound::Provenance::Projection;
  throw InvalidParameter("unknown provenance '" + s + "'");
}

namespace {

// Natural log of |x| for x != 0, good for integers far beyond double range.
double log_abs(const Integer& x) {
  Integer a = abs(x);
  const auto bits = msb(a);
  if (bits < 960) return std::log(a.convert_to<double>());
  const auto shift = bits - 900;
  Integer top = a >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

// log(1 + e^L)
double log1p_exp(double L) { return L > 30 ? L + std::log1p(std::exp(-L)) : std::log1p(std::exp(L)); }

bool analytic_range(const BSParams& p) { return p.n > p.m && p.m >= 1; }

}  // namespace

DistanceBound bs_lower_bound(const BSNormalForm& g) {
  const auto& p = g.params;
  if (!analytic_range(p)) return DistanceBound::lower(0, DistanceBound::Provenance::BSAnalytic);
  const double m = static_cast<double>(p.m), n = static_cast<double>(p.n);
  const double base = std::log(n / m);
  const double w = static_cast<double>(g.syllable_length());
  const double logN1 = g.tail_N == 0 ? 0.0 : log1p_exp(log_abs(g.tail_N));
  const double C = 1.0 / (n + 1.0);
  const double D = std::log(m * n / (n - m)) / base;
  const double value = C * (w + logN1 / base) - D;
  return DistanceBound::lower(conservative_lower(value), DistanceBound::Provenance::BSAnalytic);
}

DistanceBound bs_prefix_lower_bound(const Integer& leading_power, const Word& w, const BSParams& params) {
  params.validate();
  // w must be a concatenation of syllables a^r t, a^s t^-1 with no pinch.
  std::uint64_t T = 0;
  std::int64_t run = 0;
  int last_t = 0;
  bool pinch_possible = false;
  for (Letter l : w) {
    if (l == 1) throw InvalidParameter("syllable word contains a^-1");
    if (l == 0) {
      ++run;
      continue;
    }
    const int sign = l == 2 ? 1 : -1;
    const std::int64_t bound = sign > 0 ? params.abs_n() : params.m;
    if (run >= bound) throw InvalidParameter("syllable residue out of range");
    if (last_t == -sign && run == 0) pinch_possible = true;
    ++T;
    last_t = sign;
    run = 0;
  }
  if (run != 0) throw InvalidParameter("syllable word ends in a");
  if (pinch_possible) throw InvalidParameter("syllable word contains a pinch");
  if (!analytic_range(params)) return DistanceBound::lower(0, DistanceBound::Provenance::BSAnalytic);

  const double m = static_cast<double>(params.m), n = static_cast<double>(params.n);
  const double base = std::log(n / m);
  const double C1 = 1.0 / (n * (n + 1.0));
  const double C2 = 1.0 / ((n + 1.0) * std::fabs(base));
  const double D1 = std::log(n * m / (n - m)) / base + std::log1p(n * n / (n - m)) / ((n + 1.0) * base);
  double logterm = 0.0;
  if (leading_power != 0) logterm = log1p_exp(static_cast<double>(T) * std::log(m / n) + log_abs(leading_power));
  const double value = C1 * static_cast<double>(w.size()) + C2 * logterm - D1;
  return DistanceBound::lower(conservative_lower(value), DistanceBound::Provenance::BSAnalytic);
}

std::optional<DistanceBound> bs_prefix_bound_of_word(const Word& u, const BSParams& params) {
  std::size_t i = 0;
  Integer lead = 0;
  while (i < u.size() && (u[i] == 0 || u[i] == 1)) {
    lead += u[i] == 0 ? 1 : -1;
    ++i;
  }
  try {
    return bs_prefix_lower_bound(lead, u.slice(i, u.size()), params);
  } catch (const InvalidParameter&) {
    return std::nullopt;
  }
}

}  // namespace qgl
