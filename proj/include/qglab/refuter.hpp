#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qglab/cfl.hpp"
#include "qglab/errors.hpp"
#include "qglab/group_models.hpp"
#include "qglab/numeric.hpp"
#include "qglab/quasigeodesic.hpp"

namespace qgl {

/// The grammar misses a word that the premise says it must contain.
class SamplingRefutedPremise : public Error {
 public:
  SamplingRefutedPremise(const std::string& what, std::string missing)
      : Error(what + ": " + (missing.empty() ? "(empty word)" : missing)), word(std::move(missing)) {}
  std::string word;
};

struct RefuteOptions {
  /// Premise constants; for BS the defaults come from min_lambda of w_1.
  std::optional<Rational> lambda0;
  Rational epsilon0 = 0;
  std::size_t random_samples = 24;
  std::uint64_t seed = 20240611;
};

struct WitnessCertificate {
  std::string group;  // "z2" or "bs(m,n)"
  Rational lambda0 = 1, epsilon0 = 0, lambda = 1, epsilon = 0;
  std::size_t p = 0, q = 0, k = 0, pump = 0;
  char pumped_side = 'x';  // which of x, y lies in the marked segment
  std::string grammar_text;
  std::string grammar_digest;
  Word witness;
  std::string parse_fingerprint;
  Word u, x, z, y, v;
  std::size_t violation_offset = 0, violation_length = 0;
  /// BS only: the length bound 4mq + 7q + 2 on the violating subword.
  std::optional<std::size_t> length_bound;
  QGReport report;

  const GeneratorAlphabet& alphabet() const;
  std::string serialize() const;
  /// Throws InvalidParameter on malformed text.
  static WitnessCertificate parse(const std::string& text);
};

/// Pumps the spiral against g and certifies a non-(λ,ε)-quasigeodesic member.
/// Throws SamplingRefutedPremise, ExtractionFailed, InvalidParameter.
WitnessCertificate refute_z2(const Grammar& g, const Rational& lambda, const Rational& epsilon,
                             const RefuteOptions& options = {});
/// Same with w_q in BS(m,n), n > m >= 1.
WitnessCertificate refute_bs(const Grammar& g, const Rational& lambda, const Rational& epsilon, std::int64_t m,
                             std::int64_t n, const RefuteOptions& options = {});

struct VerifyResult {
  bool ok = false;
  std::string reason;
};

/// Replays the decomposition, CYK membership and the violation check.
VerifyResult verify_certificate(const WitnessCertificate& c);

}  // namespace qgl
