#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qgl {

using Letter = std::uint32_t;

/// A finite generating set closed under formal inverses.
///
/// Each generator contributes the letter `g` and, unless it was declared
/// self-inverse, the letter `g^-1`. Letters are numbered in declaration
/// order with every inverse directly after its generator.
class GeneratorAlphabet {
 public:
  GeneratorAlphabet() = default;

  /// Throws InvalidParameter on empty, duplicate or ill-formed names.
  static GeneratorAlphabet symmetric(const std::vector<std::string>& generators,
                                     const std::vector<std::string>& self_inverse = {});

  std::size_t size() const { return letters_.size(); }
  std::size_t generator_count() const { return names_.size(); }

  Letter inverse(Letter l) const { return letters_.at(l).inverse; }
  std::size_t generator(Letter l) const { return letters_.at(l).generator; }
  bool is_inverse_letter(Letter l) const { return letters_.at(l).formal_inverse; }
  const std::string& generator_name(std::size_t g) const { return names_.at(g); }

  /// Token text: "a" or "a^-1".
  std::string token(Letter l) const;

  std::optional<std::size_t> find_generator(std::string_view name) const;
  /// The letter for generator `name`, inverted when `inverse` is set.
  Letter letter(std::string_view name, bool inverse = false) const;
  Letter letter_of(std::size_t generator, bool inverse = false) const;

  bool operator==(const GeneratorAlphabet&) const = default;

 private:
  struct Entry {
    std::size_t generator;
    bool formal_inverse;
    Letter inverse;
    bool operator==(const Entry&) const = default;
  };
  std::vector<std::string> names_;
  std::vector<Letter> positive_;  // generator index -> its letter
  std::vector<Entry> letters_;
};

/// A finite sequence of letters of some alphabet. Equality is index-wise.
class Word {
 public:
  using value_type = Letter;
  using const_iterator = std::vector<Letter>::const_iterator;

  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const_iterator begin() const { return letters_.begin(); }
  const_iterator end() const { return letters_.end(); }
  const std::vector<Letter>& letters() const { return letters_; }

  void push_back(Letter l) { letters_.push_back(l); }
  void append(const Word& other) { letters_.insert(letters_.end(), other.begin(), other.end()); }
  void append(Letter l, std::size_t count) { letters_.insert(letters_.end(), count, l); }

  /// Letters [start, end).
  Word slice(std::size_t start, std::size_t end) const;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

Word operator+(Word lhs, const Word& rhs);

/// Reversed word with every letter replaced by its inverse.
Word inverse(const Word& w, const GeneratorAlphabet& alphabet);

/// Largest number of letters a single `g^k` token may expand to.
inline constexpr std::int64_t kMaxTokenExponent = 1'000'000;

/// Parses whitespace separated tokens `g` or `g^k` (k a nonzero integer).
/// Throws UnknownLetter or MalformedExponent.
Word parse_word(std::string_view text, const GeneratorAlphabet& alphabet);

/// Inverse of parse_word. Runs of one letter are written as a single token.
std::string serialize(const Word& w, const GeneratorAlphabet& alphabet);

/// Cancels adjacent letter/inverse pairs until none remain.
Word free_reduce(const Word& w, const GeneratorAlphabet& alphabet);

/// A contiguous subword w[start, end).
struct Subword {
  std::size_t start;
  std::size_t end;
  Word word;
};

/// n(n+1)/2.
constexpr std::size_t subword_count(std::size_t n) { return n * (n + 1) / 2; }

/// Range over all nonempty subwords ordered by start, then end.
class SubwordRange {
 public:
  explicit SubwordRange(const Word& w) : word_(&w) {}

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Subword;
    using difference_type = std::ptrdiff_t;
    using pointer = const Subword*;
    using reference = Subword;

    iterator() = default;
    iterator(const Word* w, std::size_t start, std::size_t end) : w_(w), start_(start), end_(end) {}
    Subword operator*() const { return {start_, end_, w_->slice(start_, end_)}; }
    iterator& operator++();
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const iterator& o) const { return start_ == o.start_ && end_ == o.end_; }

   private:
    const Word* w_ = nullptr;
    std::size_t start_ = 0;
    std::size_t end_ = 0;
  };

  iterator begin() const;
  iterator end() const { return {word_, word_->size(), word_->size() + 1}; }

 private:
  const Word* word_;
};

inline SubwordRange subwords(const Word& w) { return SubwordRange(w); }

/// A word stored as runs `letter^count`; expanded only on demand.
class SegmentedWord {
 public:
  struct Run {
    Letter letter;
    std::uint64_t count;
    bool operator==(const Run&) const = default;
  };

  SegmentedWord() = default;

  void push(Letter l, std::uint64_t count = 1);
  void append(const SegmentedWord& other);
  const std::vector<Run>& runs() const { return runs_; }
  std::uint64_t length() const;
  /// Reversed with inverted letters.
  SegmentedWord inverse(const GeneratorAlphabet& alphabet) const;
  /// Every occurrence of `from` (and its inverse) replaced by `to^factor`.
  SegmentedWord substitute_power(Letter from, std::uint64_t factor,
                                 const GeneratorAlphabet& alphabet) const;
  Word expand() const;

 private:
  std::vector<Run> runs_;
};

}  // namespace qgl

template <>
struct std::hash<qgl::Word> {
  std::size_t operator()(const qgl::Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto l : w) h = (h ^ l) * 1099511628211ull;
    return h;
  }
};
