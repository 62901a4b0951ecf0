#include <cstdio>
#include <sstream>

#include "qglab/cfl.hpp"

namespace qgl {

std::uint32_t Grammar::add_nonterminal(const std::string& name) {
  std::string candidate = name;
  for (int k = 1; find_nonterminal(candidate); ++k) candidate = name + "_" + std::to_string(k);
  nonterminals_.push_back(candidate);
  return static_cast<std::uint32_t>(nonterminals_.size() - 1);
}

std::optional<std::uint32_t> Grammar::find_nonterminal(std::string_view name) const {
  for (std::size_t i = 0; i < nonterminals_.size(); ++i)
    if (nonterminals_[i] == name) return static_cast<std::uint32_t>(i);
  return std::nullopt;
}

void Grammar::add_production(std::uint32_t head, std::vector<Symbol> body) {
  productions_.push_back({head, std::move(body)});
}

void Grammar::set_start(std::uint32_t s) {
  if (s >= nonterminals_.size()) throw GrammarError("start symbol out of range");
  start_ = s;
}

bool Grammar::is_cnf() const {
  for (const auto& p : productions_) {
    if (p.body.size() == 1 && p.body[0].terminal) continue;
    if (p.body.size() == 2 && !p.body[0].terminal && !p.body[1].terminal) continue;
    return false;
  }
  return true;
}

void Grammar::validate() const {
  if (nonterminals_.empty()) throw GrammarError("grammar has no nonterminals");
  if (start_ >= nonterminals_.size()) throw GrammarError("start symbol out of range");
  for (const auto& p : productions_) {
    if (p.head >= nonterminals_.size()) throw GrammarError("production head out of range");
    for (const auto& s : p.body) {
      if (s.terminal ? s.id >= terminals_.size() : s.id >= nonterminals_.size())
        throw GrammarError("production symbol out of range");
    }
  }
}

std::string Grammar::to_text() const {
  std::ostringstream out;
  auto emit = [&](const Production& p) {
    out << nonterminals_[p.head] << " ->";
    if (p.body.empty()) out << " EPSILON";
    for (const auto& s : p.body) out << ' ' << (s.terminal ? terminals_.token(s.id) : nonterminals_[s.id]);
    out << '\n';
  };
  if (!nonterminals_.empty() && accepts_empty_) out << nonterminals_[start_] << " -> EPSILON\n";
  for (const auto& p : productions_)
    if (p.head == start_) emit(p);
  for (const auto& p : productions_)
    if (p.head != start_) emit(p);
  return out.str();
}

namespace {

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

Letter terminal_of(const std::string& tok, const GeneratorAlphabet& alphabet, std::size_t line) {
  static const std::string inv = "^-1";
  const bool inverse = tok.size() > inv.size() && tok.compare(tok.size() - inv.size(), inv.size(), inv) == 0;
  const std::string name = inverse ? tok.substr(0, tok.size() - inv.size()) : tok;
  auto g = alphabet.find_generator(name);
  if (!g || (!inverse && tok.find('^') != std::string::npos))
    throw GrammarError("line " + std::to_string(line) + ": unknown symbol '" + tok + "'");
  return alphabet.letter_of(*g, inverse);
}

}  // namespace

Grammar parse_grammar(std::string_view text, const GeneratorAlphabet& terminals) {
  struct Line {
    std::size_t number;
    std::string head;
    std::vector<std::vector<std::string>> alternatives;
  };
  std::vector<Line> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  for (std::size_t number = 1; std::getline(in, raw); ++number) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    auto toks = split_ws(raw);
    if (toks.empty()) continue;
    if (toks.size() < 2 || toks[1] != "->")
      throw GrammarError("line " + std::to_string(number) + ": expected 'Head -> ...'");
    if (toks[0] == "|" || toks[0] == "EPSILON")
      throw GrammarError("line " + std::to_string(number) + ": invalid head '" + toks[0] + "'");
    Line line{number, toks[0], {{}}};
    for (std::size_t i = 2; i < toks.size(); ++i) {
      if (toks[i] == "|")
        line.alternatives.emplace_back();
      else
        line.alternatives.back().push_back(toks[i]);
    }
    lines.push_back(std::move(line));
  }
  if (lines.empty()) throw GrammarError("grammar has no productions");

  Grammar g(terminals);
  for (const auto& l : lines)
    if (!g.find_nonterminal(l.head)) g.add_nonterminal(l.head);
  g.set_start(0);
  for (const auto& l : lines) {
    const auto head = *g.find_nonterminal(l.head);
    for (const auto& alt : l.alternatives) {
      if (alt.empty()) throw GrammarError("line " + std::to_string(l.number) + ": empty alternative");
      std::vector<Symbol> body;
      if (alt.size() == 1 && alt[0] == "EPSILON") {
        g.add_production(head, {});
        continue;
      }
      for (const auto& tok : alt) {
        if (tok == "EPSILON")
          throw GrammarError("line " + std::to_string(l.number) + ": EPSILON must stand alone");
        if (auto nt = g.find_nonterminal(tok))
          body.push_back(Symbol::nt(*nt));
        else
          body.push_back(Symbol::t(terminal_of(tok, terminals, l.number)));
      }
      g.add_production(head, std::move(body));
    }
  }
  return g;
}

Grammar sigma_star_grammar(const GeneratorAlphabet& terminals) {
  Grammar g(terminals);
  auto s = g.add_nonterminal("S");
  g.set_start(s);
  g.add_production(s, {});
  g.add_production(s, {Symbol::nt(s), Symbol::nt(s)});
  for (Letter l = 0; l < terminals.size(); ++l) g.add_production(s, {Symbol::t(l)});
  return g;
}

std::string grammar_digest(const Grammar& g) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : g.to_text()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

bool language_empty(const Grammar& g) {
  if (g.accepts_empty()) return false;
  std::vector<bool> gen(g.nonterminals().size(), false);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& p : g.productions()) {
      if (gen[p.head]) continue;
      bool ok = true;
      for (const auto& s : p.body)
        if (!s.terminal && !gen[s.id]) ok = false;
      if (ok) gen[p.head] = changed = true;
    }
  }
  return g.nonterminals().empty() || !gen[g.start()];
}

}  // namespace qgl
