#include "qglab/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "qglab/errors.hpp"

namespace qgl {

GeneratorAlphabet GeneratorAlphabet::symmetric(const std::vector<std::string>& generators,
                                               const std::vector<std::string>& self_inverse) {
  GeneratorAlphabet alphabet;
  for (const auto& name : generators) {
    if (name.empty()) throw InvalidParameter("empty generator name");
    for (char c : name) {
      if (std::isspace(static_cast<unsigned char>(c)) || c == '^')
        throw InvalidParameter("generator name contains whitespace or '^': '" + name + "'");
    }
    if (alphabet.find_generator(name)) throw InvalidParameter("duplicate generator: '" + name + "'");
    const std::size_t g = alphabet.names_.size();
    alphabet.names_.push_back(name);
    const auto first = static_cast<Letter>(alphabet.letters_.size());
    alphabet.positive_.push_back(first);
    const bool involutive =
        std::find(self_inverse.begin(), self_inverse.end(), name) != self_inverse.end();
    if (involutive) {
      alphabet.letters_.push_back({g, false, first});
    } else {
      alphabet.letters_.push_back({g, false, first + 1});
      alphabet.letters_.push_back({g, true, first});
    }
  }
  for (const auto& name : self_inverse) {
    if (!alphabet.find_generator(name))
      throw InvalidParameter("self-inverse letter not declared: '" + name + "'");
  }
  return alphabet;
}

std::string GeneratorAlphabet::token(Letter l) const {
  const auto& e = letters_.at(l);
  return e.formal_inverse ? names_[e.generator] + "^-1" : names_[e.generator];
}

std::optional<std::size_t> GeneratorAlphabet::find_generator(std::string_view name) const {
  for (std::size_t g = 0; g < names_.size(); ++g) {
    if (names_[g] == name) return g;
  }
  return std::nullopt;
}

Letter GeneratorAlphabet::letter(std::string_view name, bool inverse) const {
  auto g = find_generator(name);
  if (!g) throw UnknownLetter(std::string(name));
  return letter_of(*g, inverse);
}

Letter GeneratorAlphabet::letter_of(std::size_t generator, bool inverse) const {
  Letter l = positive_.at(generator);
  return inverse ? letters_[l].inverse : l;
}

Word Word::slice(std::size_t start, std::size_t end) const {
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(start),
                                  letters_.begin() + static_cast<std::ptrdiff_t>(end)));
}

Word operator+(Word lhs, const Word& rhs) {
  lhs.append(rhs);
  return lhs;
}

Word inverse(const Word& w, const GeneratorAlphabet& alphabet) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    out.push_back(alphabet.inverse(*it));
  return Word(std::move(out));
}

Word parse_word(std::string_view text, const GeneratorAlphabet& alphabet) {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string_view token = text.substr(i, j - i);
    i = j;

    auto caret = token.find('^');
    std::string_view name = token.substr(0, caret);
    std::int64_t exponent = 1;
    if (caret != std::string_view::npos) {
      std::string_view digits = token.substr(caret + 1);
      if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), exponent);
      if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() || exponent == 0 ||
          exponent > kMaxTokenExponent || exponent < -kMaxTokenExponent)
        throw MalformedExponent(std::string(token));
    }
    auto g = alphabet.find_generator(name);
    if (!g) throw UnknownLetter(std::string(token));
    Letter l = alphabet.letter_of(*g, exponent < 0);
    w.append(l, static_cast<std::size_t>(exponent < 0 ? -exponent : exponent));
  }
  return w;
}

std::string serialize(const Word& w, const GeneratorAlphabet& alphabet) {
  std::ostringstream out;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const std::size_t run = j - i;
    if (!first) out << ' ';
    first = false;
    out << alphabet.generator_name(alphabet.generator(w[i]));
    if (alphabet.is_inverse_letter(w[i])) {
      out << "^-" << run;
    } else if (run > 1) {
      out << '^' << run;
    }
    i = j;
  }
  return out.str();
}

Word free_reduce(const Word& w, const GeneratorAlphabet& alphabet) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter l : w) {
    if (!stack.empty() && stack.back() == alphabet.inverse(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

SubwordRange::iterator& SubwordRange::iterator::operator++() {
  if (++end_ > w_->size()) {
    ++start_;
    end_ = start_ + 1;
  }
  return *this;
}

SubwordRange::iterator SubwordRange::begin() const {
  if (word_->empty()) return end();
  return {word_, 0, 1};
}

}  // namespace qgl

namespace qgl {

void SegmentedWord::push(Letter l, std::uint64_t count) {
  if (count == 0) return;
  if (!runs_.empty() && runs_.back().letter == l) {
    runs_.back().count += count;
  } else {
    runs_.push_back({l, count});
  }
}

void SegmentedWord::append(const SegmentedWord& other) {
  for (const auto& r : other.runs_) push(r.letter, r.count);
}

std::uint64_t SegmentedWord::length() const {
  std::uint64_t n = 0;
  for (const auto& r : runs_) n += r.count;
  return n;
}

SegmentedWord SegmentedWord::inverse(const GeneratorAlphabet& alphabet) const {
  SegmentedWord out;
  for (auto it = runs_.rbegin(); it != runs_.rend(); ++it) out.push(alphabet.inverse(it->letter), it->count);
  return out;
}

SegmentedWord SegmentedWord::substitute_power(Letter from, std::uint64_t factor,
                                              const GeneratorAlphabet& alphabet) const {
  SegmentedWord out;
  const Letter from_inv = alphabet.inverse(from);
  for (const auto& r : runs_) {
    const bool hit = r.letter == from || r.letter == from_inv;
    out.push(r.letter, hit ? r.count * factor : r.count);
  }
  return out;
}

Word SegmentedWord::expand() const {
  Word w;
  for (const auto& r : runs_) w.append(r.letter, r.count);
  return w;
}

}  // namespace qgl
