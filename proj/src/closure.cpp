#include <map>

#include "qglab/cfl.hpp"

namespace qgl {

bool Dfa::accepts(const Word& w) const {
  int s = start;
  for (Letter l : w) {
    if (l >= alphabet_size) return false;
    s = delta[static_cast<std::size_t>(s)][l];
    if (s < 0) return false;
  }
  return accepting[static_cast<std::size_t>(s)];
}

bool Nfa::accepts(const Word& w) const {
  std::vector<bool> cur(delta.size(), false);
  for (int s : starts) cur[static_cast<std::size_t>(s)] = true;
  for (Letter l : w) {
    if (l >= alphabet_size) return false;
    std::vector<bool> next(delta.size(), false);
    for (std::size_t s = 0; s < delta.size(); ++s)
      if (cur[s])
        for (int t : delta[s][l]) next[static_cast<std::size_t>(t)] = true;
    cur = std::move(next);
  }
  for (std::size_t s = 0; s < cur.size(); ++s)
    if (cur[s] && accepting[s]) return true;
  return false;
}

Dfa determinize(const Nfa& nfa, std::size_t max_states) {
  Dfa d;
  d.alphabet_size = nfa.alphabet_size;
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> sets;
  auto intern = [&](std::vector<int> set) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    auto [it, fresh] = index.try_emplace(set, static_cast<int>(sets.size()));
    if (fresh) {
      if (sets.size() >= max_states)
        throw BudgetExceeded("determinization exceeded " + std::to_string(max_states) + " states", sets.size());
      sets.push_back(set);
    }
    return it->second;
  };
  d.start = intern(nfa.starts);
  for (std::size_t k = 0; k < sets.size(); ++k) {
    std::vector<int> row(nfa.alphabet_size, -1);
    for (std::size_t l = 0; l < nfa.alphabet_size; ++l) {
      std::vector<int> target;
      for (int s : sets[k]) {
        const auto& ts = nfa.delta[static_cast<std::size_t>(s)][l];
        target.insert(target.end(), ts.begin(), ts.end());
      }
      row[l] = intern(std::move(target));
    }
    d.delta.push_back(row);
  }
  for (const auto& set : sets) {
    bool acc = false;
    for (int s : set) acc = acc || nfa.accepting[static_cast<std::size_t>(s)];
    d.accepting.push_back(acc);
  }
  return d;
}

Dfa universal_dfa(std::size_t alphabet_size) {
  return Dfa{alphabet_size, {std::vector<int>(alphabet_size, 0)}, 0, {true}};
}

Dfa empty_dfa(std::size_t alphabet_size) {
  return Dfa{alphabet_size, {std::vector<int>(alphabet_size, -1)}, 0, {false}};
}

Grammar intersect_regular(const Grammar& g, const Dfa& r) {
  if (r.alphabet_size != g.terminals().size()) throw InvalidParameter("automaton and grammar alphabets differ");
  const Grammar c = to_cnf(g);
  const std::size_t Q = r.size(), K = c.nonterminals().size();
  auto id = [&](std::size_t p, std::size_t a, std::size_t q) { return (a * Q + p) * Q + q; };
  std::vector<bool> gen(K * Q * Q, false);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& pr : c.productions()) {
      for (std::size_t p = 0; p < Q; ++p) {
        if (pr.body.size() == 1) {
          const int q = r.delta[p][pr.body[0].id];
          if (q >= 0 && !gen[id(p, pr.head, static_cast<std::size_t>(q))])
            gen[id(p, pr.head, static_cast<std::size_t>(q))] = changed = true;
          continue;
        }
        for (std::size_t m = 0; m < Q; ++m) {
          if (!gen[id(p, pr.body[0].id, m)]) continue;
          for (std::size_t q = 0; q < Q; ++q)
            if (gen[id(m, pr.body[1].id, q)] && !gen[id(p, pr.head, q)]) gen[id(p, pr.head, q)] = changed = true;
        }
      }
    }
  }

  Grammar out(g.terminals());
  const auto start = out.add_nonterminal("S'");
  out.set_start(start);
  std::map<std::size_t, std::uint32_t> triple;
  auto nt = [&](std::size_t p, std::size_t a, std::size_t q) {
    auto [it, fresh] = triple.try_emplace(id(p, a, q), 0);
    if (fresh)
      it->second = out.add_nonterminal("<" + std::to_string(p) + "," + c.nonterminals()[a] + "," + std::to_string(q) + ">");
    return it->second;
  };
  for (std::size_t f = 0; f < Q; ++f)
    if (r.accepting[f] && gen[id(static_cast<std::size_t>(r.start), c.start(), f)])
      out.add_production(start, {Symbol::nt(nt(static_cast<std::size_t>(r.start), c.start(), f))});
  for (const auto& pr : c.productions())
    for (std::size_t p = 0; p < Q; ++p) {
      if (pr.body.size() == 1) {
        const int q = r.delta[p][pr.body[0].id];
        if (q >= 0 && gen[id(p, pr.head, static_cast<std::size_t>(q))])
          out.add_production(nt(p, pr.head, static_cast<std::size_t>(q)), {pr.body[0]});
        continue;
      }
      for (std::size_t m = 0; m < Q; ++m)
        for (std::size_t q = 0; q < Q; ++q)
          if (gen[id(p, pr.body[0].id, m)] && gen[id(m, pr.body[1].id, q)])
            out.add_production(nt(p, pr.head, q),
                               {Symbol::nt(nt(p, pr.body[0].id, m)), Symbol::nt(nt(m, pr.body[1].id, q))});
    }
  out.set_accepts_empty(c.accepts_empty() && r.accepting[static_cast<std::size_t>(r.start)]);
  return to_cnf(out);
}

Grammar intersect_regular(const Grammar& g, const Nfa& r, std::size_t max_states) {
  return intersect_regular(g, determinize(r, max_states));
}

BlockHomomorphism::BlockHomomorphism(GeneratorAlphabet source, GeneratorAlphabet target,
                                     const std::vector<Word>& generator_blocks)
    : source_(std::move(source)), target_(std::move(target)), blocks_(source_.size()) {
  if (generator_blocks.size() != source_.generator_count())
    throw InvalidParameter("need one block per source generator");
  for (std::size_t gi = 0; gi < generator_blocks.size(); ++gi) {
    const Word& b = generator_blocks[gi];
    if (b.empty()) throw InvalidParameter("blocks must be nonempty");
    for (Letter l : b)
      if (l >= target_.size()) throw InvalidParameter("block letter outside the target alphabet");
    const Letter pos = source_.letter_of(gi, false);
    blocks_[pos] = b;
    const Letter neg = source_.inverse(pos);
    if (neg != pos) blocks_[neg] = inverse(b, target_);
    l_max_ = std::max(l_max_, b.size());
  }
}

Word BlockHomomorphism::apply(const Word& w) const {
  Word out;
  for (Letter l : w) out.append(blocks_.at(l));
  return out;
}

Grammar inverse_hom(const Grammar& g, const BlockHomomorphism& h) {
  if (!(g.terminals() == h.target())) throw InvalidParameter("grammar alphabet differs from the block target");
  const Grammar c = to_cnf(g);
  const auto& T = h.source();

  // Positions alphabet: one letter per (source letter, offset in its block).
  std::vector<std::pair<Letter, std::size_t>> pos;
  std::vector<std::string> names;
  for (Letter t = 0; t < T.size(); ++t)
    for (std::size_t i = 0; i < h.block(t).size(); ++i) {
      names.push_back("p" + std::to_string(pos.size()));
      pos.emplace_back(t, i);
    }
  const auto P = GeneratorAlphabet::symmetric(names, names);

  Grammar over_p(P);
  for (const auto& name : c.nonterminals()) over_p.add_nonterminal(name);
  over_p.set_start(c.start());
  over_p.set_accepts_empty(c.accepts_empty());
  for (const auto& pr : c.productions()) {
    if (pr.body.size() == 2) {
      over_p.add_production(pr.head, pr.body);
      continue;
    }
    for (Letter k = 0; k < pos.size(); ++k)
      if (h.block(pos[k].first)[pos[k].second] == pr.body[0].id) over_p.add_production(pr.head, {Symbol::t(k)});
  }

  // Blocks read in full, one after another.
  Dfa blocks{P.size(), {std::vector<int>(P.size(), -1)}, 0, {true}};
  std::vector<int> state_of(pos.size(), -1);
  for (Letter k = 0; k < pos.size(); ++k) {
    const auto [t, i] = pos[k];
    const auto len = h.block(t).size();
    const int from = i == 0 ? 0 : state_of[k - 1];
    int to = 0;
    if (i + 1 < len) {
      to = static_cast<int>(blocks.delta.size());
      blocks.delta.emplace_back(P.size(), -1);
      blocks.accepting.push_back(false);
    }
    state_of[k] = to;
    blocks.delta[static_cast<std::size_t>(from)][k] = to;
  }
  const Grammar meet = intersect_regular(over_p, blocks);

  Grammar out(T);
  for (const auto& name : meet.nonterminals()) out.add_nonterminal(name);
  out.set_start(meet.start());
  out.set_accepts_empty(meet.accepts_empty());
  for (const auto& pr : meet.productions()) {
    if (pr.body.size() == 2) {
      out.add_production(pr.head, pr.body);
      continue;
    }
    const auto [t, i] = pos[pr.body[0].id];
    if (i == 0)
      out.add_production(pr.head, {Symbol::t(t)});
    else
      out.add_production(pr.head, {});
  }
  return to_cnf(out);
}

std::pair<Rational, Rational> forward_constants(const Rational& A, const Rational& B, const Rational& l_max,
                                                const Rational& lambda, const Rational& epsilon) {
  if (A < 1 || B < 0 || l_max < 1 || lambda < 1 || epsilon < 0)
    throw InvalidParameter("forward_constants needs A >= 1, B >= 0, l_max >= 1, lambda >= 1, epsilon >= 0");
  const Rational Lambda = A * lambda * l_max;
  const Rational E = 2 * (Lambda + 1) * l_max + Lambda * B + l_max * epsilon;
  return {Lambda, E};
}

std::pair<Rational, Rational> reverse_constants(const Rational& A, const Rational& B, const Rational& Lambda,
                                                const Rational& E) {
  if (A < 1 || B < 0 || Lambda < 1 || E < 0)
    throw InvalidParameter("reverse_constants needs A >= 1, B >= 0, Lambda >= 1, E >= 0");
  return {A * Lambda, Lambda * B + E};
}

}  // namespace qgl
