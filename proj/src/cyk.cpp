#include <cstdio>
#include <functional>

#include "qglab/cfl.hpp"

namespace qgl {

namespace {

struct Back {
  std::uint32_t production;
  std::uint32_t split;
};

// Nonterminal sets per span, stored by length so only real spans use memory.
class Table {
 public:
  Table(std::size_t n, std::size_t k) : n_(n), words_((k + 63) / 64), offset_(n + 2, 0) {
    for (std::size_t len = 1; len <= n; ++len) offset_[len + 1] = offset_[len] + (n - len + 1);
    bits_.assign(offset_[n + 1] * words_, 0);
  }

  bool has(std::size_t i, std::size_t len, std::uint32_t a) const { return (row(i, len)[a / 64] >> (a % 64)) & 1u; }
  void set(std::size_t i, std::size_t len, std::uint32_t a) { row(i, len)[a / 64] |= std::uint64_t{1} << (a % 64); }
  bool covers(std::size_t i, std::size_t len, const std::vector<std::uint64_t>& mask) const {
    const auto* r = row(i, len);
    for (std::size_t j = 0; j < words_; ++j)
      if ((r[j] & mask[j]) != mask[j]) return false;
    return true;
  }
  std::size_t words() const { return words_; }

 private:
  std::uint64_t* row(std::size_t i, std::size_t len) { return &bits_[(offset_[len] + i) * words_]; }
  const std::uint64_t* row(std::size_t i, std::size_t len) const { return &bits_[(offset_[len] + i) * words_]; }
  std::size_t n_, words_;
  std::vector<std::size_t> offset_;
  std::vector<std::uint64_t> bits_;
};

Table fill(const Grammar& g, const Word& w) {
  if (!g.is_cnf()) throw GrammarError("CYK needs a grammar in Chomsky normal form");
  const std::size_t n = w.size();
  Table t(n, g.nonterminals().size());
  const auto& ps = g.productions();
  std::vector<const Production*> binary;
  std::vector<std::uint64_t> heads(t.words(), 0);
  for (const auto& p : ps) {
    if (p.body.size() == 1) continue;
    binary.push_back(&p);
    heads[p.head / 64] |= std::uint64_t{1} << (p.head % 64);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& p : ps)
      if (p.body.size() == 1 && p.body[0].id == w[i]) t.set(i, 1, p.head);
  for (std::size_t len = 2; len <= n; ++len)
    for (std::size_t i = 0; i + len <= n; ++i)
      for (std::size_t k = 1; k < len && !t.covers(i, len, heads); ++k)
        for (const auto* p : binary)
          if (t.has(i, k, p->body[0].id) && t.has(i + k, len - k, p->body[1].id)) t.set(i, len, p->head);
  return t;
}

// Lowest production index, then lowest split.
Back choose(const Grammar& g, const Table& t, const Word& w, std::size_t i, std::size_t len, std::uint32_t a) {
  const auto& ps = g.productions();
  for (std::uint32_t p = 0; p < ps.size(); ++p) {
    const auto& pr = ps[p];
    if (pr.head != a) continue;
    if (len == 1) {
      if (pr.body.size() == 1 && pr.body[0].id == w[i]) return {p, 0};
      continue;
    }
    if (pr.body.size() != 2) continue;
    for (std::size_t k = 1; k < len; ++k)
      if (t.has(i, k, pr.body[0].id) && t.has(i + k, len - k, pr.body[1].id)) return {p, static_cast<std::uint32_t>(k)};
  }
  throw ExtractionFailed("CYK table has no derivation for a set entry");
}

}  // namespace

std::optional<ParseTree> cyk(const Grammar& g, const Word& w) {
  ParseTree tree;
  if (w.empty()) {
    if (!g.accepts_empty()) return std::nullopt;
    tree.nodes.push_back({Symbol::nt(g.start()), -1, 0, 0, {}});
    return tree;
  }
  if (g.nonterminals().empty()) return std::nullopt;
  const Table t = fill(g, w);
  if (!t.has(0, w.size(), g.start())) return std::nullopt;
  const auto& ps = g.productions();
  std::function<std::size_t(std::size_t, std::size_t, std::uint32_t)> build = [&](std::size_t i, std::size_t len,
                                                                                  std::uint32_t a) {
    const Back b = choose(g, t, w, i, len, a);
    const std::size_t id = tree.nodes.size();
    tree.nodes.push_back({Symbol::nt(a), static_cast<int>(b.production), i, i + len, {}});
    if (len == 1) {
      const std::size_t leaf = tree.nodes.size();
      tree.nodes.push_back({Symbol::t(w[i]), -1, i, i + 1, {}});
      tree.nodes[id].children.push_back(leaf);
    } else {
      const auto& pr = ps[b.production];
      const std::size_t left = build(i, b.split, pr.body[0].id);
      const std::size_t right = build(i + b.split, len - b.split, pr.body[1].id);
      tree.nodes[id].children = {left, right};
    }
    return id;
  };
  build(0, w.size(), g.start());
  return tree;
}

bool cyk_member(const Grammar& g, const Word& w) {
  if (w.empty()) return g.accepts_empty();
  if (g.nonterminals().empty()) return false;
  return fill(g, w).has(0, w.size(), g.start());
}

Word ParseTree::yield() const {
  Word out;
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    if (nodes[v].label.terminal) out.push_back(nodes[v].label.id);
    for (auto c : nodes[v].children) walk(c);
  };
  if (!nodes.empty()) walk(0);
  return out;
}

std::size_t ParseTree::depth() const {
  std::function<std::size_t(std::size_t)> d = [&](std::size_t v) -> std::size_t {
    std::size_t best = 0;
    for (auto c : nodes[v].children) best = std::max(best, 1 + d(c));
    return best;
  };
  return nodes.empty() ? 0 : d(0);
}

std::string ParseTree::fingerprint() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t x) {
    for (int b = 0; b < 8; ++b) {
      h ^= (x >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    const auto& n = nodes[v];
    mix(n.label.terminal);
    mix(n.label.id);
    mix(static_cast<std::uint64_t>(n.production));
    mix(n.start);
    mix(n.end);
    for (auto c : n.children) walk(c);
  };
  if (!nodes.empty()) walk(0);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace qgl
