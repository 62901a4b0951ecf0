#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qglab/alphabet.hpp"
#include "qglab/group_models.hpp"
#include "qglab/numeric.hpp"

namespace qgl {

// Letters of the two-generator alphabet {a, b} (or {a, t} for BS).
inline constexpr Letter kA = 0, kAinv = 1, kB = 2, kBinv = 3;
inline constexpr Letter kT = 2, kTinv = 3;

/// a^k with negative k meaning (a^-1)^|k|; same for the other generator.
void push_power(SegmentedWord& w, Letter positive, std::int64_t k);
void push_power(SegmentedWord& w, Letter positive, const Integer& k);

/// (b^-q a^2q b^q) a^-q (b^q a^2q b^-q), length 9q, value (3q, 0) in ℤ².
SegmentedWord spiral_z2(std::int64_t q);
/// b^-q a^2q b^q a^-2q, the closed loop left after pumping the spiral.
SegmentedWord spiral_loop(std::int64_t q);
/// (b^-n a^{n²} b^n) a^-n (b^n a^{n²} b^-n), n >= 2.
SegmentedWord nilpotent_spiral(std::int64_t n);
/// a^-p b^-q a^p b^q.
SegmentedWord commutator_word(std::int64_t p, std::int64_t q);

struct BSSequence {
  std::int64_t m = 0, n = 0;
  /// d_0..d_k, y_i = m d_i, z_i = n d_i; x_i = y_{i+1} - z_i for i < k.
  std::vector<Integer> d, y, z, x;
};

/// Requires n > m >= 1 and k >= 1.
BSSequence bs_sequence(std::int64_t m, std::int64_t n, std::int64_t k);

/// a^{x_0} t^-1 a^{x_1} t^-1 ... a^{x_{q-1}} t^-1
SegmentedWord bs_u(const BSParams& p, std::int64_t q);
/// a^{-x_0} t^-1 ... a^{-x_{q-1}} t^-1
SegmentedWord bs_v(const BSParams& p, std::int64_t q);
/// a^-1 t^{2q} v_{2q} a v_{2q}^-1
SegmentedWord bs_w_left(const BSParams& p, std::int64_t q);
/// a t^{2q} u_{2q} a^-1 u_{2q}^-1
SegmentedWord bs_w_right(const BSParams& p, std::int64_t q);
/// left t^-q right; equals t^{3q} in BS(m,n) for n > m >= 1.
SegmentedWord bs_w(const BSParams& p, std::int64_t q);
/// bs_w for (m², n²) with every t replaced by t². Requires n < 0.
SegmentedWord bs_w_negative(const BSParams& p, std::int64_t q);

/// Checks b^q a^p = a^p b^q [b,a]^{pq} in the Heisenberg group, where
/// [x,y] = x^-1 y^-1 x y. Requires 1 <= p,q <= 50.
bool verify_collecting_class2(std::int64_t p, std::int64_t q);

struct FamilyArgs {
  std::int64_t q = 1;  // also n for nil-spiral, p for commutator
  std::int64_t q2 = 1;  // second exponent for commutator
  BSParams bs{2, 3};
};

/// spiral-z2, nil-spiral, commutator, bs-u, bs-v, bs-w, bs-w-neg
const std::vector<std::string>& family_names();
/// Throws InvalidParameter for unknown names.
SegmentedWord make_family(const std::string& name, const FamilyArgs& args);
/// z2, heisenberg or bs.
std::string family_group(const std::string& name);

}  // namespace qgl
