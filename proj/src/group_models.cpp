#include "qglab/group_models.hpp"

#include <sstream>

#include "qglab/errors.hpp"

namespace qgl {

// ---------------------------------------------------------------------------
// Abelian

AbelianVector AbelianVector::operator-() const {
  AbelianVector r(*this);
  for (auto& c : r.coordinates) c = -c;
  return r;
}

AbelianVector& AbelianVector::operator+=(const AbelianVector& o) {
  for (std::size_t i = 0; i < coordinates.size(); ++i) coordinates[i] += o.coordinates[i];
  return *this;
}

AbelianVector eval_abelian(const Word& w, std::size_t rank, const std::vector<AbelianVector>& assignment) {
  AbelianVector sum(rank);
  for (Letter l : w) {
    if (l >= assignment.size() || assignment[l].rank() != rank)
      throw UnmappedLetter("letter " + std::to_string(l) + " has no rank-" + std::to_string(rank) + " image");
    sum += assignment[l];
  }
  return sum;
}

AbelianModel::AbelianModel(GeneratorAlphabet alphabet, std::vector<AbelianVector> generator_images)
    : alphabet_(std::move(alphabet)) {
  if (generator_images.size() != alphabet_.generator_count())
    throw UnmappedLetter("need one image per generator");
  rank_ = generator_images.empty() ? 0 : generator_images.front().rank();
  images_.resize(alphabet_.size());
  for (std::size_t g = 0; g < generator_images.size(); ++g) {
    if (generator_images[g].rank() != rank_) throw UnmappedLetter("generator images differ in rank");
    Letter l = alphabet_.letter_of(g);
    images_[l] = generator_images[g];
    images_[alphabet_.inverse(l)] = -generator_images[g];
  }
  standard_ = generator_images.size() == rank_;
  for (std::size_t g = 0; standard_ && g < rank_; ++g) {
    for (std::size_t i = 0; i < rank_; ++i) {
      if (generator_images[g].coordinates[i] != (i == g ? 1 : 0)) standard_ = false;
    }
  }
}

AbelianModel AbelianModel::standard(std::size_t rank) {
  if (rank == 0 || rank > 26) throw InvalidParameter("rank must be in [1, 26]");
  std::vector<std::string> names;
  std::vector<AbelianVector> images;
  for (std::size_t i = 0; i < rank; ++i) {
    names.emplace_back(1, static_cast<char>('a' + i));
    AbelianVector e(rank);
    e.coordinates[i] = 1;
    images.push_back(e);
  }
  return AbelianModel(GeneratorAlphabet::symmetric(names), images);
}

void AbelianModel::right_multiply(Element& g, Letter l) const { g += images_.at(l); }

AbelianModel::Element AbelianModel::multiply(const Element& g, const Element& h) const {
  Element r = g;
  r += h;
  return r;
}

bool AbelianModel::is_identity(const Element& g) const {
  for (const auto& c : g.coordinates) {
    if (c != 0) return false;
  }
  return true;
}

AbelianModel::Key AbelianModel::key(const Element& g) const {
  Key k;
  k.reserve(g.rank());
  for (const auto& c : g.coordinates) k.push_back(to_int64(c));
  return k;
}

std::string AbelianModel::describe(const Key& k) const {
  std::ostringstream out;
  for (std::size_t i = 0; i < k.size(); ++i) out << (i ? "," : "") << k[i];
  return out.str();
}

Integer AbelianModel::l1_norm(const Element& g) const {
  Integer s = 0;
  for (const auto& c : g.coordinates) s += c < 0 ? Integer(-c) : c;
  return s;
}

// ---------------------------------------------------------------------------
// Heisenberg

HeisenbergTriple eval_heisenberg(const Word& w, const std::vector<HeisenbergTriple>& assignment) {
  HeisenbergTriple g{};
  for (Letter l : w) {
    if (l >= assignment.size()) throw UnmappedLetter("letter " + std::to_string(l) + " has no image");
    g = g * assignment[l];
  }
  return g;
}

HeisenbergModel::HeisenbergModel(GeneratorAlphabet alphabet, std::vector<HeisenbergTriple> generator_images)
    : alphabet_(std::move(alphabet)) {
  if (generator_images.size() != alphabet_.generator_count())
    throw UnmappedLetter("need one image per generator");
  images_.resize(alphabet_.size());
  for (std::size_t g = 0; g < generator_images.size(); ++g) {
    Letter l = alphabet_.letter_of(g);
    images_[l] = generator_images[g];
    images_[alphabet_.inverse(l)] = generator_images[g].inverse();
  }
}

HeisenbergModel HeisenbergModel::standard() {
  return HeisenbergModel(GeneratorAlphabet::symmetric({"a", "b"}), {{1, 0, 0}, {0, 1, 0}});
}

std::string HeisenbergModel::describe(const Key& k) const {
  return std::to_string(k[0]) + "," + std::to_string(k[1]) + "," + std::to_string(k[2]);
}

// ---------------------------------------------------------------------------
// Baumslag–Solitar

void BSParams::validate() const {
  if (m < 1 || abs_n() <= m)
    throw UnsupportedParameters("BS(" + std::to_string(m) + "," + std::to_string(n) +
                                ") needs m >= 1 and |n| > m");
}

std::uint64_t BSNormalForm::syllable_length() const {
  std::uint64_t len = 0;
  for (const auto& s : syllables) len += static_cast<std::uint64_t>(s.a_exponent) + 1;
  return len;
}

const GeneratorAlphabet& bs_alphabet() {
  static const GeneratorAlphabet alphabet = GeneratorAlphabet::symmetric({"a", "t"});
  return alphabet;
}

namespace {

// Floor division with nonnegative remainder.
void divmod(const Integer& x, std::int64_t modulus, Integer& quotient, std::int64_t& remainder) {
  Integer r = x % modulus;
  if (r < 0) r += modulus;
  remainder = static_cast<std::int64_t>(r);
  quotient = (x - r) / modulus;
}

}  // namespace

void bs_push_a(BSNormalForm& g, const Integer& k) { g.tail_N += k; }

void bs_push_t(BSNormalForm& g, int sign) {
  const auto& p = g.params;
  Integer d;
  std::int64_t r = 0;
  if (sign > 0) {
    // a^{d|n|} t = t a^{d sgn(n) m}; pinch t^-1 a^{kn} t = a^{km}.
    divmod(g.tail_N, p.abs_n(), d, r);
    Integer carried = (p.n < 0 ? -d : d) * p.m;
    if (r == 0 && !g.syllables.empty() && g.syllables.back().t_sign < 0) {
      g.tail_N = g.syllables.back().a_exponent + carried;
      g.syllables.pop_back();
    } else {
      g.syllables.push_back({r, +1});
      g.tail_N = carried;
    }
  } else {
    // a^{dm} t^-1 = t^-1 a^{dn}; pinch t a^{km} t^-1 = a^{kn}.
    divmod(g.tail_N, p.m, d, r);
    Integer carried = d * p.n;
    if (r == 0 && !g.syllables.empty() && g.syllables.back().t_sign > 0) {
      g.tail_N = g.syllables.back().a_exponent + carried;
      g.syllables.pop_back();
    } else {
      g.syllables.push_back({r, -1});
      g.tail_N = carried;
    }
  }
}

BSNormalForm bs_identity(const BSParams& params) {
  params.validate();
  return BSNormalForm{params, {}, 0};
}

namespace {

void push_letter(BSNormalForm& g, Letter l, const Integer& count) {
  const auto& alphabet = bs_alphabet();
  const bool inv = alphabet.is_inverse_letter(l);
  if (alphabet.generator(l) == 0) {
    bs_push_a(g, inv ? Integer(-count) : count);
  } else {
    for (Integer i = 0; i < count; ++i) bs_push_t(g, inv ? -1 : +1);
  }
}

}  // namespace

BSNormalForm bs_normalize(const Word& w, const BSParams& params) {
  BSNormalForm g = bs_identity(params);
  for (Letter l : w) {
    if (l >= bs_alphabet().size()) throw UnknownLetter("letter index " + std::to_string(l));
    push_letter(g, l, 1);
  }
  return g;
}

BSNormalForm bs_normalize(const SegmentedWord& w, const BSParams& params) {
  BSNormalForm g = bs_identity(params);
  for (const auto& run : w.runs()) {
    if (run.letter >= bs_alphabet().size()) throw UnknownLetter("letter index " + std::to_string(run.letter));
    push_letter(g, run.letter, Integer(run.count));
  }
  return g;
}

BSNormalForm bs_multiply(const BSNormalForm& g, const BSNormalForm& h) {
  if (!(g.params == h.params)) throw ParameterMismatch("normal forms from different BS(m,n)");
  BSNormalForm r = g;
  for (const auto& s : h.syllables) {
    bs_push_a(r, s.a_exponent);
    bs_push_t(r, s.t_sign);
  }
  bs_push_a(r, h.tail_N);
  return r;
}

BSNormalForm bs_inverse(const BSNormalForm& g) {
  BSNormalForm r = bs_identity(g.params);
  bs_push_a(r, -g.tail_N);
  for (auto it = g.syllables.rbegin(); it != g.syllables.rend(); ++it) {
    bs_push_t(r, -it->t_sign);
    bs_push_a(r, -it->a_exponent);
  }
  return r;
}

Integer abelianize_bs(const BSNormalForm& g) {
  Integer s = 0;
  for (const auto& syl : g.syllables) s += syl.t_sign;
  return s;
}

bool bs_is_canonical(const BSNormalForm& g) {
  for (std::size_t i = 0; i < g.syllables.size(); ++i) {
    const auto& s = g.syllables[i];
    const std::int64_t bound = s.t_sign > 0 ? g.params.abs_n() : g.params.m;
    if (s.t_sign != 1 && s.t_sign != -1) return false;
    if (s.a_exponent < 0 || s.a_exponent >= bound) return false;
    if (i > 0 && s.a_exponent == 0 && g.syllables[i - 1].t_sign == -s.t_sign) return false;
  }
  return true;
}

std::string serialize(const BSNormalForm& g) {
  // Runs of (generator, signed exponent); adjacent t-runs of one sign merge.
  std::vector<std::pair<char, Integer>> runs;
  auto push = [&runs](char gen, const Integer& e) {
    if (e == 0) return;
    if (!runs.empty() && runs.back().first == gen && (runs.back().second > 0) == (e > 0)) {
      runs.back().second += e;
    } else {
      runs.emplace_back(gen, e);
    }
  };
  for (const auto& s : g.syllables) {
    push('a', s.a_exponent);
    push('t', s.t_sign);
  }
  push('a', g.tail_N);
  std::ostringstream out;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (i) out << ' ';
    out << runs[i].first;
    if (runs[i].second != 1) out << '^' << runs[i].second;
  }
  return out.str();
}

Word to_word(const BSNormalForm& g) {
  const auto& alphabet = bs_alphabet();
  Integer abs_tail = g.tail_N < 0 ? Integer(-g.tail_N) : g.tail_N;
  if (abs_tail > 100'000'000) throw InvalidParameter("tail exponent too large to expand: " + g.tail_N.str());
  Word w;
  for (const auto& s : g.syllables) {
    w.append(alphabet.letter_of(0), static_cast<std::size_t>(s.a_exponent));
    w.push_back(alphabet.letter_of(1, s.t_sign < 0));
  }
  w.append(alphabet.letter_of(0, g.tail_N < 0), static_cast<std::size_t>(abs_tail));
  return w;
}

BSModel::BSModel(BSParams params) : params_(params) { params_.validate(); }

void BSModel::right_multiply(Element& g, Letter l) const { push_letter(g, l, 1); }

}  // namespace qgl
