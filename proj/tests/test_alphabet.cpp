#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qglab/alphabet.hpp"
#include "qglab/errors.hpp"
#include "support/oracles.hpp"

using namespace qgl;

namespace {
const GeneratorAlphabet ab = GeneratorAlphabet::symmetric({"a", "b"});
const Letter a = 0, A = 1, b = 2, B = 3;
}  // namespace

TEST_CASE("alphabet layout and validation") {
  CHECK(ab.size() == 4);
  CHECK(ab.inverse(a) == A);
  CHECK(ab.inverse(B) == b);
  CHECK(ab.token(A) == "a^-1");
  const auto p = GeneratorAlphabet::symmetric({"p0", "p1"}, {"p0", "p1"});
  CHECK(p.size() == 2);
  CHECK(p.inverse(1) == 1);
  CHECK_THROWS_AS(GeneratorAlphabet::symmetric({"a", "a"}), InvalidParameter);
  CHECK_THROWS_AS(GeneratorAlphabet::symmetric({"a b"}), InvalidParameter);
  CHECK_THROWS_AS(GeneratorAlphabet::symmetric({"a^2"}), InvalidParameter);
  CHECK_THROWS_AS(GeneratorAlphabet::symmetric({""}), InvalidParameter);
}

TEST_CASE("parse_word examples") {
  CHECK(parse_word("a^2 b^-1", ab) == Word{a, a, B});
  CHECK(parse_word("", ab).empty());
  const Word s = parse_word("b^-3 a^6 b^3 a^-3 b^3 a^6 b^-3", ab);
  CHECK(s.size() == 3 + 6 + 3 + 3 + 3 + 6 + 3);
  CHECK(s.size() == 27);
  CHECK(parse_word("  a \t b ", ab) == Word{a, b});
}

TEST_CASE("parse_word errors") {
  CHECK_THROWS_AS(parse_word("c", ab), UnknownLetter);
  CHECK_THROWS_AS(parse_word("a^0", ab), MalformedExponent);
  CHECK_THROWS_AS(parse_word("a^x", ab), MalformedExponent);
  CHECK_THROWS_AS(parse_word("a^", ab), MalformedExponent);
  CHECK_THROWS_AS(parse_word("a^1.5", ab), MalformedExponent);
  CHECK_THROWS_AS(parse_word("a^1000001", ab), MalformedExponent);
  CHECK(parse_word("a^-1000000", ab).size() == 1000000);
}

TEST_CASE("serialize format") {
  CHECK(serialize(Word{a, a, B}, ab) == "a^2 b^-1");
  CHECK(serialize(Word{A}, ab) == "a^-1");
  CHECK(serialize(Word{}, ab) == "");
  CHECK(serialize(Word{a, b, a}, ab) == "a b a");
}

TEST_CASE("free_reduce examples") {
  CHECK(free_reduce(Word{a, A, b}, ab) == Word{b});
  CHECK(free_reduce(Word{}, ab).empty());
  const auto bs = GeneratorAlphabet::symmetric({"a", "t"});
  const Word w{2, 0, 1, 3};  // t a a^-1 t^-1
  CHECK(oracle::reduce_to_fixpoint(w, bs).empty());
  CHECK(free_reduce(w, bs).empty());
}

TEST_CASE("subword enumeration") {
  auto count = [](const Word& w) {
    std::size_t c = 0;
    for (auto it = subwords(w).begin(); it != subwords(w).end(); ++it) ++c;
    return c;
  };
  CHECK(count(Word{a, b}) == 3);
  CHECK(count(Word{}) == 0);
  CHECK(count(Word(std::vector<Letter>(9, a))) == 45);
  CHECK(subword_count(9) == 45);

  const Word w{a, b, B};
  std::vector<std::pair<std::size_t, std::size_t>> seen;
  for (auto s : subwords(w)) {
    CHECK(s.word == w.slice(s.start, s.end));
    seen.emplace_back(s.start, s.end);
  }
  CHECK(seen.front() == std::pair<std::size_t, std::size_t>{0, 1});
  CHECK(seen.back() == std::pair<std::size_t, std::size_t>{2, 3});
}

TEST_CASE("property: free reduction against fixpoint oracle") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Word w = oracle::random_word(rng, ab.size(), 24);
    const Word r = free_reduce(w, ab);
    CHECK(r == oracle::reduce_to_fixpoint(w, ab));
    CHECK(free_reduce(r, ab) == r);
    CHECK(r.size() <= w.size());
    CHECK((w.size() - r.size()) % 2 == 0);
  }
}

TEST_CASE("property: parse o serialize round trip") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const Word w = oracle::random_word(rng, ab.size(), 30);
    CHECK(parse_word(serialize(w, ab), ab) == w);
  }
}

TEST_CASE("inverse word") {
  CHECK(inverse(Word{a, b, B}, ab) == Word{b, B, A});
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Word w = oracle::random_word(rng, ab.size(), 15);
    CHECK(free_reduce(w + inverse(w, ab), ab).empty());
  }
}

TEST_CASE("segmented words") {
  SegmentedWord s;
  s.push(a, 3);
  s.push(a, 2);
  s.push(b, 1);
  CHECK(s.runs().size() == 2);
  CHECK(s.length() == 6);
  CHECK(s.expand() == Word{a, a, a, a, a, b});
  CHECK(s.inverse(ab).expand() == Word{B, A, A, A, A, A});
  const SegmentedWord t = s.substitute_power(b, 4, ab);
  CHECK(t.length() == 9);
  CHECK(t.expand() == parse_word("a^5 b^4", ab));
}
