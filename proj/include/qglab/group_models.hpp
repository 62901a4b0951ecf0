#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qglab/alphabet.hpp"
#include "qglab/numeric.hpp"

namespace qgl {

struct VectorHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto c : v) h = (h ^ static_cast<std::size_t>(c)) * 1099511628211ull;
    return h;
  }
};

// ---------------------------------------------------------------------------
// Free abelian groups

struct AbelianVector {
  std::vector<Integer> coordinates;

  AbelianVector() = default;
  explicit AbelianVector(std::size_t rank) : coordinates(rank) {}
  AbelianVector(std::initializer_list<long long> c) {
    for (auto v : c) coordinates.emplace_back(v);
  }
  std::size_t rank() const { return coordinates.size(); }
  AbelianVector operator-() const;
  AbelianVector& operator+=(const AbelianVector& o);
  bool operator==(const AbelianVector&) const = default;
};

/// Sum of letter images. `assignment[l]` is the image of letter l.
/// Throws UnmappedLetter if a letter has no image or the wrong rank.
AbelianVector eval_abelian(const Word& w, std::size_t rank, const std::vector<AbelianVector>& assignment);

/// ℤ^r with a generating set given by one vector per generator.
class AbelianModel {
 public:
  using Element = AbelianVector;
  using Key = std::vector<std::int64_t>;
  using KeyHash = VectorHash;

  AbelianModel(GeneratorAlphabet alphabet, std::vector<AbelianVector> generator_images);
  /// Generators a, b, c, ... mapped to the standard basis.
  static AbelianModel standard(std::size_t rank);

  const GeneratorAlphabet& alphabet() const { return alphabet_; }
  const std::vector<AbelianVector>& assignment() const { return images_; }
  std::size_t rank() const { return rank_; }
  std::string id() const { return "z" + std::to_string(rank_); }

  Element identity() const { return AbelianVector(rank_); }
  void right_multiply(Element& g, Letter l) const;
  Element multiply(const Element& g, const Element& h) const;
  Element inverse(const Element& g) const { return -g; }
  Element evaluate(const Word& w) const { return eval_abelian(w, rank_, images_); }
  bool is_identity(const Element& g) const;
  Key key(const Element& g) const;
  std::string describe(const Key& k) const;

  /// True when the generators are exactly the standard basis, so the word
  /// metric is the ℓ¹ norm.
  bool is_standard() const { return standard_; }
  Integer l1_norm(const Element& g) const;

 private:
  GeneratorAlphabet alphabet_;
  std::size_t rank_;
  std::vector<AbelianVector> images_;  // per letter
  bool standard_ = false;
};

// ---------------------------------------------------------------------------
// Discrete Heisenberg group as upper unitriangular integer matrices
//   [1 x z]
//   [0 1 y]
//   [0 0 1]

struct HeisenbergTriple {
  Integer x, y, z;

  /// (x1,y1,z1)(x2,y2,z2) = (x1+x2, y1+y2, z1+z2+x1*y2)
  HeisenbergTriple operator*(const HeisenbergTriple& o) const { return {x + o.x, y + o.y, z + o.z + x * o.y}; }
  HeisenbergTriple inverse() const { return {-x, -y, -z + x * y}; }
  bool operator==(const HeisenbergTriple&) const = default;
};

HeisenbergTriple eval_heisenberg(const Word& w, const std::vector<HeisenbergTriple>& assignment);

class HeisenbergModel {
 public:
  using Element = HeisenbergTriple;
  using Key = std::array<std::int64_t, 3>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return static_cast<std::size_t>(k[0] * 1000003LL ^ k[1] * 998244353LL ^ k[2] * 0x9E3779B97F4A7C15LL);
    }
  };

  HeisenbergModel(GeneratorAlphabet alphabet, std::vector<HeisenbergTriple> generator_images);
  /// Generators a = (1,0,0), b = (0,1,0); [a,b] = (0,0,1) is central.
  static HeisenbergModel standard();

  const GeneratorAlphabet& alphabet() const { return alphabet_; }
  const std::vector<HeisenbergTriple>& assignment() const { return images_; }
  std::string id() const { return "heisenberg"; }

  Element identity() const { return {}; }
  void right_multiply(Element& g, Letter l) const { g = g * images_.at(l); }
  Element multiply(const Element& g, const Element& h) const { return g * h; }
  Element inverse(const Element& g) const { return g.inverse(); }
  Element evaluate(const Word& w) const { return eval_heisenberg(w, images_); }
  bool is_identity(const Element& g) const { return g == Element{}; }
  Key key(const Element& g) const { return {to_int64(g.x), to_int64(g.y), to_int64(g.z)}; }
  std::string describe(const Key& k) const;

 private:
  GeneratorAlphabet alphabet_;
  std::vector<HeisenbergTriple> images_;  // per letter
};

// ---------------------------------------------------------------------------
// Baumslag–Solitar groups  BS(m,n) = < a, t | t a^m t^-1 = a^n >
//
// Normal form w(a,t) a^N where w is a product of syllables a^r t (0 <= r < |n|)
// and a^s t^-1 (0 <= s < m) containing no pinch t a^{km} t^-1 or t^-1 a^{kn} t.
// Surplus a-powers move right via a^{dn} t = t a^{dm} and a^{dm} t^-1 = t^-1 a^{dn}.

struct BSParams {
  std::int64_t m = 1;
  std::int64_t n = 2;

  /// Requires m >= 1 and |n| > m; throws UnsupportedParameters otherwise.
  void validate() const;
  std::int64_t abs_n() const { return n < 0 ? -n : n; }
  bool operator==(const BSParams&) const = default;
};

struct Syllable {
  std::int64_t a_exponent;
  int t_sign;
  bool operator==(const Syllable&) const = default;
};

struct BSNormalForm {
  BSParams params;
  std::vector<Syllable> syllables;
  Integer tail_N;

  bool operator==(const BSNormalForm&) const = default;
  bool is_identity() const { return syllables.empty() && tail_N == 0; }
  /// Number of letters in the syllable word w (tail excluded).
  std::uint64_t syllable_length() const;
};

/// The alphabet {a, t} used by every BS word.
const GeneratorAlphabet& bs_alphabet();

/// Right-multiplies a normal form in place by a^k, t or t^-1.
void bs_push_a(BSNormalForm& g, const Integer& k);
void bs_push_t(BSNormalForm& g, int sign);

BSNormalForm bs_identity(const BSParams& params);
BSNormalForm bs_normalize(const Word& w, const BSParams& params);
BSNormalForm bs_normalize(const SegmentedWord& w, const BSParams& params);
inline BSNormalForm bs_normalize(const Word& w, std::int64_t m, std::int64_t n) { return bs_normalize(w, BSParams{m, n}); }

/// Throws ParameterMismatch for different (m,n).
BSNormalForm bs_multiply(const BSNormalForm& g, const BSNormalForm& h);
BSNormalForm bs_inverse(const BSNormalForm& g);
/// Signed count of t-letters; the homomorphism t -> 1, a -> 0.
Integer abelianize_bs(const BSNormalForm& g);

/// Residues in range and no pinch.
bool bs_is_canonical(const BSNormalForm& g);

/// Word text of the normal form; parses back to the same element.
std::string serialize(const BSNormalForm& g);
/// The syllable word followed by a^N. Throws InvalidParameter if |N| is huge.
Word to_word(const BSNormalForm& g);

class BSModel {
 public:
  using Element = BSNormalForm;
  using Key = std::string;
  using KeyHash = std::hash<std::string>;

  explicit BSModel(BSParams params);

  const GeneratorAlphabet& alphabet() const { return bs_alphabet(); }
  const BSParams& params() const { return params_; }
  std::string id() const { return "bs(" + std::to_string(params_.m) + "," + std::to_string(params_.n) + ")"; }

  Element identity() const { return bs_identity(params_); }
  void right_multiply(Element& g, Letter l) const;
  Element multiply(const Element& g, const Element& h) const { return bs_multiply(g, h); }
  Element inverse(const Element& g) const { return bs_inverse(g); }
  Element evaluate(const Word& w) const { return bs_normalize(w, params_); }
  bool is_identity(const Element& g) const { return g.is_identity(); }
  Key key(const Element& g) const { return serialize(g); }
  std::string describe(const Key& k) const { return k.empty() ? "1" : k; }

 private:
  BSParams params_;
};

}  // namespace qgl
