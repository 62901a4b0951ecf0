#include "qglab/quasigeodesic.hpp"

#include <sstream>

namespace qgl {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "Certified";
    case Verdict::Violated: return "Violated";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string to_string(OracleTag t) {
  switch (t) {
    case OracleTag::Trivial: return "trivial";
    case OracleTag::Lookup: return "lookup";
    case OracleTag::Projection: return "projection";
    case OracleTag::Analytic: return "analytic";
    case OracleTag::Search: return "search";
    case OracleTag::WordLength: return "word-length";
    case OracleTag::None: return "none";
  }
  return "?";
}

Verdict parse_verdict(const std::string& s) {
  if (s == "Certified") return Verdict::Certified;
  if (s == "Violated") return Verdict::Violated;
  if (s == "Inconclusive") return Verdict::Inconclusive;
  throw InvalidParameter("unknown verdict '" + s + "'");
}

std::string QGReport::serialize() const {
  std::ostringstream out;
  out << "verdict=" << to_string(verdict) << "\n";
  out << "lambda=" << to_string(lambda) << "\n";
  out << "epsilon=" << to_string(epsilon) << "\n";
  out << "word_length=" << word_length << "\n";
  if (violation) {
    out << "violation.start=" << violation->start << "\n";
    out << "violation.end=" << violation->end << "\n";
    out << "violation.subword_length=" << violation->subword_length << "\n";
    out << "violation.kind=" << to_string(violation->bound.kind) << "\n";
    out << "violation.distance=" << to_string(violation->bound.value) << "\n";
    out << "violation.provenance=" << to_string(violation->bound.provenance) << "\n";
  }
  if (min_lambda_infinite)
    out << "min_lambda=inf\n";
  else if (min_lambda)
    out << "min_lambda=" << to_string(*min_lambda) << "\n";
  out << "inconclusive=" << inconclusive << "\n";
  for (const auto& [k, n] : oracle_counts) out << "oracle." << k << "=" << n << "\n";
  return out.str();
}

namespace {

std::size_t parse_size(const std::string& key, const std::string& v) {
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

QGReport QGReport::parse(const std::string& text) {
  QGReport r;
  std::istringstream in(text);
  std::string line;
  Violation v;
  bool has_violation = false, has_verdict = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw InvalidParameter("report line without '=': " + line);
    const std::string key = line.substr(0, eq), val = line.substr(eq + 1);
    if (key == "verdict") {
      r.verdict = parse_verdict(val);
      has_verdict = true;
    } else if (key == "lambda") {
      r.lambda = parse_rational(val);
    } else if (key == "epsilon") {
      r.epsilon = parse_rational(val);
    } else if (key == "word_length") {
      r.word_length = parse_size(key, val);
    } else if (key == "violation.start") {
      v.start = parse_size(key, val);
      has_violation = true;
    } else if (key == "violation.end") {
      v.end = parse_size(key, val);
    } else if (key == "violation.subword_length") {
      v.subword_length = parse_size(key, val);
    } else if (key == "violation.kind") {
      v.bound.kind = parse_kind(val);
    } else if (key == "violation.distance") {
      v.bound.value = parse_rational(val);
    } else if (key == "violation.provenance") {
      v.bound.provenance = parse_provenance(val);
    } else if (key == "min_lambda") {
      if (val == "inf")
        r.min_lambda_infinite = true;
      else
        r.min_lambda = parse_rational(val);
    } else if (key == "inconclusive") {
      r.inconclusive = parse_size(key, val);
    } else if (key.rfind("oracle.", 0) == 0) {
      r.oracle_counts[key.substr(7)] = parse_size(key, val);
    } else {
      throw InvalidParameter("unknown report key '" + key + "'");
    }
  }
  if (!has_verdict) throw InvalidParameter("report has no verdict");
  if (has_violation) r.violation = v;
  return r;
}

DistanceBound cheap_lower_bound(const AbelianModel& model, const AbelianVector& g, const Word&, std::size_t,
                                std::size_t) {
  if (!model.is_standard()) return DistanceBound::lower(0, DistanceBound::Provenance::Projection);
  return DistanceBound::lower(Rational(model.l1_norm(g)), DistanceBound::Provenance::Projection);
}

DistanceBound cheap_upper_bound(const AbelianModel& model, const AbelianVector& g, std::size_t length) {
  Rational len(static_cast<long long>(length));
  if (model.is_standard()) {
    Rational l1(model.l1_norm(g));
    if (l1 < len) return DistanceBound::upper(l1, DistanceBound::Provenance::Projection);
  }
  return DistanceBound::upper(len, DistanceBound::Provenance::WordLength);
}

DistanceBound cheap_lower_bound(const BSModel& model, const BSNormalForm& g, const Word& w, std::size_t start,
                                std::size_t end) {
  DistanceBound best = DistanceBound::lower(Rational(abs(abelianize_bs(g))), DistanceBound::Provenance::Projection);
  auto a = bs_lower_bound(g);
  if (a.value > best.value) best = a;
  if (auto p = bs_prefix_bound_of_word(w.slice(start, end), model.params()); p && p->value > best.value) best = *p;
  return best;
}

DistanceBound cheap_upper_bound(const BSModel&, const BSNormalForm& g, std::size_t length) {
  Rational len(static_cast<long long>(length));
  Rational nf = Rational(Integer(g.syllable_length()) + abs(g.tail_N));
  if (nf < len) return DistanceBound::upper(nf, DistanceBound::Provenance::WordLength);
  return DistanceBound::upper(len, DistanceBound::Provenance::WordLength);
}

}  // namespace qgl
