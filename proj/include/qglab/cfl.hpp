#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qglab/alphabet.hpp"
#include "qglab/errors.hpp"
#include "qglab/numeric.hpp"

namespace qgl {

struct Symbol {
  bool terminal = false;
  std::uint32_t id = 0;  // letter or nonterminal index

  static Symbol t(Letter l) { return {true, l}; }
  static Symbol nt(std::uint32_t i) { return {false, i}; }
  auto operator<=>(const Symbol&) const = default;
};

struct Production {
  std::uint32_t head = 0;
  std::vector<Symbol> body;  // empty body is an epsilon production
  auto operator<=>(const Production&) const = default;
};

class Grammar {
 public:
  Grammar() = default;
  explicit Grammar(GeneratorAlphabet terminals) : terminals_(std::move(terminals)) {}

  const GeneratorAlphabet& terminals() const { return terminals_; }
  const std::vector<std::string>& nonterminals() const { return nonterminals_; }
  const std::vector<Production>& productions() const { return productions_; }
  std::uint32_t start() const { return start_; }
  /// For CNF grammars the empty word is tracked here instead of by a rule.
  bool accepts_empty() const { return accepts_empty_; }

  /// Appends a nonterminal; a numeric suffix keeps names unique.
  std::uint32_t add_nonterminal(const std::string& name);
  std::optional<std::uint32_t> find_nonterminal(std::string_view name) const;
  void add_production(std::uint32_t head, std::vector<Symbol> body);
  void set_start(std::uint32_t s);
  void set_accepts_empty(bool e) { accepts_empty_ = e; }
  void set_productions(std::vector<Production> p) { productions_ = std::move(p); }

  /// Every production A -> a or A -> BC.
  bool is_cnf() const;
  /// Throws GrammarError when a symbol is out of range.
  void validate() const;
  /// The line format accepted by parse_grammar.
  std::string to_text() const;

 private:
  GeneratorAlphabet terminals_;
  std::vector<std::string> nonterminals_;
  std::vector<Production> productions_;
  std::uint32_t start_ = 0;
  bool accepts_empty_ = false;
};

/// Lines `Head -> sym sym ... | ...`; `#` starts a comment; EPSILON is the
/// empty body; the first head is the start symbol. Symbols that occur as a
/// head are nonterminals, all others must be alphabet tokens.
Grammar parse_grammar(std::string_view text, const GeneratorAlphabet& terminals);
/// S -> EPSILON | S S | x for every letter x.
Grammar sigma_star_grammar(const GeneratorAlphabet& terminals);
/// 16 hex digits of FNV-1a over to_text().
std::string grammar_digest(const Grammar& g);

/// Weakly equivalent CNF grammar; the empty word goes to accepts_empty.
/// A grammar with an empty language comes back with no productions.
Grammar to_cnf(const Grammar& g);
/// True when no word is derivable from the start symbol.
bool language_empty(const Grammar& g);

struct ParseTree {
  struct Node {
    Symbol label;
    int production = -1;  // -1 for leaves
    std::size_t start = 0, end = 0;
    std::vector<std::size_t> children;
  };
  std::vector<Node> nodes;  // nodes[0] is the root

  Word yield() const;
  std::size_t depth() const;
  /// FNV-1a over the preorder (label, production, span) sequence.
  std::string fingerprint() const;
};

/// Parse tree of w under a CNF grammar, or nullopt. Among alternatives the
/// lowest production index, then the shortest left part, wins.
std::optional<ParseTree> cyk(const Grammar& cnf, const Word& w);
bool cyk_member(const Grammar& cnf, const Word& w);

struct OgdenDecomposition {
  Word u, x, z, y, v;
  /// Offsets of x, z, y, v in w.
  std::size_t x_start = 0, z_start = 0, y_start = 0, v_start = 0;
  std::size_t p = 0;

  Word pumped(std::size_t i) const;
  /// The four bullets, with pumping checked by CYK for i = 0..max_i.
  bool verify(const Grammar& cnf, const Word& w, const std::set<std::size_t>& marks, std::size_t max_i = 4) const;
};

/// 2^{k+2} with k the number of nonterminals.
std::size_t ogden_constant(const Grammar& cnf);

/// Throws NotInLanguage, InsufficientMarks or ExtractionFailed.
OgdenDecomposition ogden_decompose(const Grammar& cnf, const Word& w, const std::set<std::size_t>& marks);

// Finite automata over letters 0..alphabet_size-1.

struct Dfa {
  std::size_t alphabet_size = 0;
  std::vector<std::vector<int>> delta;  // -1 means reject
  int start = 0;
  std::vector<bool> accepting;

  std::size_t size() const { return delta.size(); }
  bool accepts(const Word& w) const;
};

struct Nfa {
  std::size_t alphabet_size = 0;
  std::vector<std::vector<std::vector<int>>> delta;  // state -> letter -> targets
  std::vector<int> starts;
  std::vector<bool> accepting;

  bool accepts(const Word& w) const;
};

/// Subset construction; throws BudgetExceeded beyond max_states.
Dfa determinize(const Nfa& nfa, std::size_t max_states = 100'000);
Dfa universal_dfa(std::size_t alphabet_size);
Dfa empty_dfa(std::size_t alphabet_size);

/// Triple construction; the result is in CNF.
Grammar intersect_regular(const Grammar& g, const Dfa& r);
Grammar intersect_regular(const Grammar& g, const Nfa& r, std::size_t max_states = 100'000);

class BlockHomomorphism {
 public:
  /// One nonempty block over `target` per generator of `source`; inverse
  /// letters map to the reversed inverse block.
  BlockHomomorphism(GeneratorAlphabet source, GeneratorAlphabet target, const std::vector<Word>& generator_blocks);

  const GeneratorAlphabet& source() const { return source_; }
  const GeneratorAlphabet& target() const { return target_; }
  const Word& block(Letter l) const { return blocks_.at(l); }
  std::size_t max_block_length() const { return l_max_; }
  Word apply(const Word& w) const;

 private:
  GeneratorAlphabet source_, target_;
  std::vector<Word> blocks_;  // per source letter
  std::size_t l_max_ = 0;
};

/// CNF grammar over the source alphabet for h^-1(L(g)).
Grammar inverse_hom(const Grammar& g, const BlockHomomorphism& h);

/// (Λ, E) = (Aλℓ, 2(Λ+1)ℓ + ΛB + ℓε).
std::pair<Rational, Rational> forward_constants(const Rational& A, const Rational& B, const Rational& l_max,
                                                const Rational& lambda, const Rational& epsilon);
/// (λ, ε) = (AΛ, ΛB + E).
std::pair<Rational, Rational> reverse_constants(const Rational& A, const Rational& B, const Rational& Lambda,
                                                const Rational& E);

}  // namespace qgl
