#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qglab/cfl.hpp"
#include "qglab/errors.hpp"
#include "qglab/quasigeodesic.hpp"
#include "support/oracles.hpp"

using namespace qgl;

namespace {

const GeneratorAlphabet ab = GeneratorAlphabet::symmetric({"a", "b"}, {"a", "b"});
const Letter a = 0, b = 1;

Grammar anbn() { return parse_grammar("S -> a S b | a b\n", ab); }

Word anbm(std::size_t n, std::size_t m) {
  Word w;
  w.append(a, n);
  w.append(b, m);
  return w;
}

std::vector<Word> words_upto(std::size_t k, std::size_t n) {
  std::vector<Word> out;
  for (std::size_t i = 0; i <= n; ++i)
    for (auto& w : oracle::all_words(k, i)) out.push_back(std::move(w));
  return out;
}

// compares a CNF grammar with a reference language on every word up to n
void same_language(const Grammar& cnf, const std::set<Word>& lang, std::size_t k, std::size_t n) {
  for (const auto& w : words_upto(k, n)) CHECK_MESSAGE(cyk_member(cnf, w) == (lang.count(w) > 0), serialize(w, cnf.terminals()));
}

}  // namespace

TEST_CASE("grammar parsing and text") {
  const Grammar g = anbn();
  CHECK(g.nonterminals().size() == 1);
  CHECK(g.productions().size() == 2);
  CHECK_FALSE(g.is_cnf());
  CHECK(parse_grammar(g.to_text(), ab).to_text() == g.to_text());
  CHECK(grammar_digest(g).size() == 16);
  CHECK(grammar_digest(g) == grammar_digest(anbn()));
  CHECK(grammar_digest(g) != grammar_digest(parse_grammar("S -> a S b | b a\n", ab)));
  CHECK_THROWS_AS(parse_grammar("S -> c\n", ab), Error);
  CHECK_THROWS_AS(parse_grammar("garbage\n", ab), GrammarError);
  const auto e = parse_grammar("# comment\nS -> EPSILON | a S\n", ab);
  CHECK(oracle::enumerate_language(e, 3).size() == 4);
}

TEST_CASE("to_cnf examples") {
  const Grammar c = to_cnf(anbn());
  CHECK(c.is_cnf());
  same_language(c, oracle::enumerate_language(anbn(), 8), 2, 8);
  const Grammar single = parse_grammar("S -> a\n", ab);
  const Grammar sc = to_cnf(single);
  CHECK(sc.is_cnf());
  CHECK(sc.productions().size() == 1);
  CHECK(cyk_member(sc, Word{a}));
  const auto four = GeneratorAlphabet::symmetric({"a", "b"});
  const Grammar star = to_cnf(sigma_star_grammar(four));
  CHECK(star.accepts_empty());
  CHECK(star.nonterminals().size() == 2);
  CHECK(ogden_constant(star) == 16);
  for (const auto& w : words_upto(4, 6)) CHECK(cyk_member(star, w));
  CHECK(language_empty(to_cnf(parse_grammar("S -> a S\n", ab))));
  CHECK_FALSE(language_empty(anbn()));
}

TEST_CASE("cyk examples") {
  const Grammar c = to_cnf(anbn());
  const auto t = cyk(c, anbm(3, 3));
  REQUIRE(t.has_value());
  CHECK(t->yield() == anbm(3, 3));
  CHECK(t->depth() >= 3);
  CHECK_FALSE(cyk(c, anbm(3, 2)).has_value());
  CHECK_FALSE(cyk_member(c, Word{}));
  CHECK(cyk_member(to_cnf(parse_grammar("S -> EPSILON | a\n", ab)), Word{}));
  // deterministic
  CHECK(cyk(c, anbm(5, 5))->fingerprint() == cyk(c, anbm(5, 5))->fingerprint());
}

TEST_CASE("property: CYK agrees with derivation enumeration on random grammars") {
  std::mt19937_64 rng(2024);
  int nonempty = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Grammar g = oracle::random_grammar(rng, ab);
    const auto lang = oracle::enumerate_language(g, 8);
    if (!lang.empty()) ++nonempty;
    const Grammar c = to_cnf(g);
    CHECK(c.is_cnf());
    for (const auto& w : words_upto(2, 8)) {
      const bool in = lang.count(w) > 0;
      REQUIRE(cyk_member(c, w) == in);
      if (in && !w.empty()) CHECK(cyk(c, w)->yield() == w);
    }
  }
  CHECK(nonempty > 50);
}

TEST_CASE("ogden decomposition") {
  const Grammar c = to_cnf(anbn());
  const std::size_t p = ogden_constant(c);
  std::set<std::size_t> few{0, 1, 2, 3, 4, 5};
  CHECK_THROWS_AS(ogden_decompose(c, anbm(3, 3), few), InsufficientMarks);
  CHECK_THROWS_AS(ogden_decompose(c, anbm(3, 2), {0, 1, 2}), NotInLanguage);

  const std::size_t h = p / 2 + 1;
  const Word w = anbm(h, h);
  std::set<std::size_t> all;
  for (std::size_t i = 0; i < w.size(); ++i) all.insert(i);
  const auto d = ogden_decompose(c, w, all);
  CHECK(d.verify(c, w, all));
  CHECK(d.pumped(1) == w);
  CHECK(d.pumped(2) == anbm(h + d.x.size(), h + d.y.size()));
  CHECK(cyk_member(c, d.pumped(2)));
  CHECK(d.x.size() == d.y.size());

  // only a middle block marked: x or y inside it
  const auto four = GeneratorAlphabet::symmetric({"a", "b"});
  const Grammar star = to_cnf(sigma_star_grammar(four));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const Word alpha = oracle::random_word(rng, 4, 10), beta = oracle::random_word(rng, 4, 30),
               gamma = oracle::random_word(rng, 4, 10);
    if (beta.size() < 16) continue;
    const Word x = alpha + beta + gamma;
    std::set<std::size_t> marks;
    for (std::size_t j = alpha.size(); j < alpha.size() + beta.size(); ++j) marks.insert(j);
    const auto e = ogden_decompose(star, x, marks);
    CHECK(e.verify(star, x, marks));
    const std::size_t lo = alpha.size(), hi = alpha.size() + beta.size();
    const bool x_in = !e.x.empty() && e.x_start >= lo && e.x_start + e.x.size() <= hi;
    const bool y_in = !e.y.empty() && e.y_start >= lo && e.y_start + e.y.size() <= hi;
    CHECK((x_in || y_in));
  }
}

TEST_CASE("intersection with regular languages") {
  const Grammar g = anbn();
  const auto lang = oracle::enumerate_language(g, 8);
  same_language(intersect_regular(g, universal_dfa(2)), lang, 2, 8);
  CHECK(language_empty(intersect_regular(g, empty_dfa(2))));
  // a a* b b*
  Dfa r;
  r.alphabet_size = 2;
  r.delta = {{1, -1}, {1, 2}, {-1, 2}};
  r.start = 0;
  r.accepting = {false, false, true};
  same_language(intersect_regular(g, r), lang, 2, 8);
  // only even length words through an NFA
  Nfa even;
  even.alphabet_size = 2;
  even.delta = {{{1}, {1}}, {{0}, {0}}};
  even.starts = {0};
  even.accepting = {true, false};
  const Grammar sg = sigma_star_grammar(ab);
  std::set<Word> evens;
  for (const auto& w : words_upto(2, 8))
    if (w.size() % 2 == 0) evens.insert(w);
  same_language(intersect_regular(sg, even), evens, 2, 8);
  CHECK(determinize(even).accepts(Word{a, b}));
  CHECK_FALSE(determinize(even).accepts(Word{a}));
}

TEST_CASE("inverse homomorphism examples") {
  // identity
  const BlockHomomorphism id(ab, ab, {Word{a}, Word{b}});
  const Grammar g = anbn();
  same_language(inverse_hom(g, id), oracle::enumerate_language(g, 8), 2, 8);
  // t -> aa over (aa)*
  const auto A = GeneratorAlphabet::symmetric({"a"}, {"a"});
  const auto T = GeneratorAlphabet::symmetric({"t"}, {"t"});
  const BlockHomomorphism dbl(T, A, {Word{0, 0}});
  const Grammar even = inverse_hom(parse_grammar("S -> EPSILON | a a S\n", A), dbl);
  for (std::size_t n = 0; n <= 8; ++n) CHECK(cyk_member(even, Word(std::vector<Letter>(n, 0))));
  const Grammar odd = inverse_hom(parse_grammar("S -> a | a a S\n", A), dbl);
  CHECK(language_empty(odd));
  // mixed block lengths over sigma star
  const auto st = GeneratorAlphabet::symmetric({"s", "t"}, {"s", "t"});
  const BlockHomomorphism mixed(st, ab, {Word{a, b}, Word{b}});
  CHECK(mixed.max_block_length() == 2);
  CHECK(mixed.apply(Word{0, 1, 0}) == (Word{a, b, b, a, b}));
  const Grammar all = inverse_hom(sigma_star_grammar(ab), mixed);
  for (const auto& w : words_upto(2, 8)) CHECK(cyk_member(all, w));
}

TEST_CASE("property: inverse homomorphism commutes with membership") {
  std::mt19937_64 rng(99);
  const auto st = GeneratorAlphabet::symmetric({"s", "t"}, {"s", "t"});
  for (int trial = 0; trial < 40; ++trial) {
    const Grammar g = oracle::random_grammar(rng, ab);
    const Grammar gc = to_cnf(g);
    std::vector<Word> blocks;
    for (int i = 0; i < 2; ++i) {
      Word blk = oracle::random_word(rng, 2, 3);
      if (blk.empty()) blk.push_back(a);
      blocks.push_back(blk);
    }
    const BlockHomomorphism h(st, ab, blocks);
    const Grammar pre = inverse_hom(g, h);
    for (const auto& w : words_upto(2, 7)) REQUIRE(cyk_member(pre, w) == cyk_member(gc, h.apply(w)));
  }
}

TEST_CASE("constants") {
  CHECK(forward_constants(1, 0, 1, 5, 0) == std::pair<Rational, Rational>{5, 12});
  CHECK(forward_constants(1, 0, 1, 1, 0) == std::pair<Rational, Rational>{1, 4});
  CHECK(forward_constants(1, 0, 1, 15, 0).first == 3 * forward_constants(1, 0, 1, 5, 0).first);
  CHECK(reverse_constants(1, 0, 5, 12) == std::pair<Rational, Rational>{5, 12});
  CHECK(reverse_constants(1, 0, 7, Rational(3, 2)) == std::pair<Rational, Rational>{7, Rational(3, 2)});
  CHECK(reverse_constants(1, 1, 5, 12).second > reverse_constants(1, 0, 5, 12).second);
  CHECK(reverse_constants(2, 0, 5, 12).first == 10);
}

TEST_CASE("property: block replacement keeps quasigeodesics") {
  const auto z2 = AbelianModel::standard(2);
  DistanceOracle o(z2);
  const BlockHomomorphism h(z2.alphabet(), z2.alphabet(), {Word{0}, Word{2}});
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    const Word w = oracle::random_word(rng, 4, 14);
    const auto ml = min_lambda(w, 0, z2, o);
    if (ml.infinite) continue;
    const auto [L, E] = forward_constants(1, 0, Rational(static_cast<long long>(h.max_block_length())), ml.value, 0);
    CHECK(check(h.apply(w), L, E, z2, o).verdict == Verdict::Certified);
  }
}
