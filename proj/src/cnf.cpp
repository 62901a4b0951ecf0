#include <map>
#include <set>

#include "qglab/cfl.hpp"

namespace qgl {

namespace {

// Keeps the first occurrence of each production.
std::vector<Production> dedupe(const std::vector<Production>& ps) {
  std::set<Production> seen;
  std::vector<Production> out;
  for (const auto& p : ps)
    if (seen.insert(p).second) out.push_back(p);
  return out;
}

std::vector<bool> generating(std::size_t count, const std::vector<Production>& ps) {
  std::vector<bool> gen(count, false);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& p : ps) {
      if (gen[p.head]) continue;
      bool ok = true;
      for (const auto& s : p.body)
        if (!s.terminal && !gen[s.id]) ok = false;
      if (ok) gen[p.head] = changed = true;
    }
  }
  return gen;
}

// Drops non-generating and unreachable nonterminals and renumbers.
Grammar prune(const Grammar& g) {
  const auto n = g.nonterminals().size();
  const auto gen = generating(n, g.productions());
  std::vector<Production> kept;
  for (const auto& p : g.productions()) {
    bool ok = gen[p.head];
    for (const auto& s : p.body)
      if (!s.terminal && !gen[s.id]) ok = false;
    if (ok) kept.push_back(p);
  }
  std::vector<bool> reach(n, false);
  reach[g.start()] = true;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& p : kept) {
      if (!reach[p.head]) continue;
      for (const auto& s : p.body)
        if (!s.terminal && !reach[s.id]) reach[s.id] = changed = true;
    }
  }
  Grammar out(g.terminals());
  std::vector<std::uint32_t> index(n, 0);
  index[g.start()] = out.add_nonterminal(g.nonterminals()[g.start()]);
  for (std::size_t i = 0; i < n; ++i)
    if (reach[i] && i != g.start()) index[i] = out.add_nonterminal(g.nonterminals()[i]);
  out.set_start(index[g.start()]);
  out.set_accepts_empty(g.accepts_empty());
  for (const auto& p : kept) {
    if (!reach[p.head]) continue;
    std::vector<Symbol> body = p.body;
    for (auto& s : body)
      if (!s.terminal) s.id = index[s.id];
    out.add_production(index[p.head], std::move(body));
  }
  return out;
}

}  // namespace

Grammar to_cnf(const Grammar& input) {
  input.validate();
  Grammar g(input.terminals());
  for (const auto& name : input.nonterminals()) g.add_nonterminal(name);
  const auto start = g.add_nonterminal(input.nonterminals()[input.start()] + "0");
  g.set_start(start);
  std::vector<Production> ps;
  ps.push_back({start, {Symbol::nt(input.start())}});
  if (input.accepts_empty()) ps.push_back({start, {}});
  for (const auto& p : input.productions()) ps.push_back(p);

  // Terminals inside long bodies get their own nonterminal.
  std::map<Letter, std::uint32_t> term_nt;
  for (auto& p : ps) {
    if (p.body.size() < 2) continue;
    for (auto& s : p.body) {
      if (!s.terminal) continue;
      auto it = term_nt.find(s.id);
      if (it == term_nt.end())
        it = term_nt.emplace(s.id, g.add_nonterminal("[" + g.terminals().token(s.id) + "]")).first;
      s = Symbol::nt(it->second);
    }
  }
  for (const auto& [l, nt] : term_nt) ps.push_back({nt, {Symbol::t(l)}});

  // Binarize.
  std::vector<Production> bin;
  for (const auto& p : ps) {
    if (p.body.size() <= 2) {
      bin.push_back(p);
      continue;
    }
    std::uint32_t head = p.head;
    for (std::size_t i = 0; i + 2 < p.body.size(); ++i) {
      auto next = g.add_nonterminal(g.nonterminals()[p.head] + "_");
      bin.push_back({head, {p.body[i], Symbol::nt(next)}});
      head = next;
    }
    bin.push_back({head, {p.body[p.body.size() - 2], p.body.back()}});
  }

  // Remove epsilon rules.
  const auto count = g.nonterminals().size();
  std::vector<bool> nullable(count, false);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& p : bin) {
      if (nullable[p.head]) continue;
      bool all = true;
      for (const auto& s : p.body)
        if (s.terminal || !nullable[s.id]) all = false;
      if (all) nullable[p.head] = changed = true;
    }
  }
  auto is_nullable = [&](const Symbol& s) { return !s.terminal && nullable[s.id]; };
  std::vector<Production> noeps;
  for (const auto& p : bin) {
    if (p.body.empty()) continue;
    noeps.push_back(p);
    if (p.body.size() == 2) {
      if (is_nullable(p.body[0])) noeps.push_back({p.head, {p.body[1]}});
      if (is_nullable(p.body[1])) noeps.push_back({p.head, {p.body[0]}});
    }
  }
  noeps = dedupe(noeps);

  // Remove unit rules: A -> B then B -> alpha gives A -> alpha.
  std::vector<std::vector<bool>> unit(count, std::vector<bool>(count, false));
  for (std::size_t a = 0; a < count; ++a) unit[a][a] = true;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& p : noeps) {
      if (p.body.size() != 1 || p.body[0].terminal) continue;
      for (std::size_t a = 0; a < count; ++a)
        if (unit[a][p.head] && !unit[a][p.body[0].id]) unit[a][p.body[0].id] = changed = true;
    }
  }
  std::vector<Production> final_ps;
  for (std::size_t a = 0; a < count; ++a)
    for (const auto& p : noeps) {
      if (p.body.size() == 1 && !p.body[0].terminal) continue;
      if (unit[a][p.head]) final_ps.push_back({static_cast<std::uint32_t>(a), p.body});
    }
  g.set_productions(dedupe(final_ps));
  g.set_accepts_empty(nullable[start]);
  return prune(g);
}

}  // namespace qgl
