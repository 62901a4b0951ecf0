#include <limits>

#include "qglab/cfl.hpp"

namespace qgl {

Word OgdenDecomposition::pumped(std::size_t i) const {
  Word out = u;
  for (std::size_t k = 0; k < i; ++k) out.append(x);
  out.append(z);
  for (std::size_t k = 0; k < i; ++k) out.append(y);
  out.append(v);
  return out;
}

namespace {

std::size_t marks_in(const std::set<std::size_t>& marks, std::size_t a, std::size_t b) {
  return static_cast<std::size_t>(std::distance(marks.lower_bound(a), marks.lower_bound(b)));
}

bool bullets(const OgdenDecomposition& d, const std::set<std::size_t>& marks) {
  const std::size_t n = d.v_start + d.v.size();
  const std::size_t mu = marks_in(marks, 0, d.x_start), mx = marks_in(marks, d.x_start, d.z_start),
                    mz = marks_in(marks, d.z_start, d.y_start), my = marks_in(marks, d.y_start, d.v_start),
                    mv = marks_in(marks, d.v_start, n);
  if (mx + mz + my > d.p) return false;
  if (mz == 0) return false;
  return (mu > 0 && mx > 0) || (my > 0 && mv > 0);
}

}  // namespace

bool OgdenDecomposition::verify(const Grammar& cnf, const Word& w, const std::set<std::size_t>& marks,
                                std::size_t max_i) const {
  if (x_start != u.size() || z_start != x_start + x.size() || y_start != z_start + z.size() ||
      v_start != y_start + y.size())
    return false;
  if (pumped(1) != w) return false;
  if (!bullets(*this, marks)) return false;
  for (std::size_t i = 0; i <= max_i; ++i)
    if (!cyk_member(cnf, pumped(i))) return false;
  return true;
}

std::size_t ogden_constant(const Grammar& cnf) {
  const std::size_t k = cnf.nonterminals().size();
  if (k + 2 >= 63) return std::numeric_limits<std::size_t>::max();
  return std::size_t{1} << (k + 2);
}

OgdenDecomposition ogden_decompose(const Grammar& cnf, const Word& w, const std::set<std::size_t>& marks) {
  for (auto m : marks)
    if (m >= w.size()) throw InvalidParameter("marked position " + std::to_string(m) + " outside the word");
  auto tree = cyk(cnf, w);
  if (!tree) throw NotInLanguage("word is not in the grammar's language");
  const std::size_t p = ogden_constant(cnf);
  if (marks.size() < p)
    throw InsufficientMarks("need at least " + std::to_string(p) + " marked positions, got " +
                            std::to_string(marks.size()));

  // Follow the child with more marked leaves.
  const auto& nodes = tree->nodes;
  std::vector<std::size_t> path{0};
  for (std::size_t v = 0; nodes[v].children.size() == 2;) {
    const auto l = nodes[v].children[0], r = nodes[v].children[1];
    const auto ml = marks_in(marks, nodes[l].start, nodes[l].end), mr = marks_in(marks, nodes[r].start, nodes[r].end);
    v = mr > ml ? r : l;
    path.push_back(v);
  }

  for (std::size_t j = path.size(); j-- > 1;) {
    const auto& lower = nodes[path[j]];
    if (lower.label.terminal) continue;
    for (std::size_t i = j; i-- > 0;) {
      const auto& upper = nodes[path[i]];
      if (upper.label != lower.label) continue;
      OgdenDecomposition d;
      d.p = p;
      d.u = w.slice(0, upper.start);
      d.x = w.slice(upper.start, lower.start);
      d.z = w.slice(lower.start, lower.end);
      d.y = w.slice(lower.end, upper.end);
      d.v = w.slice(upper.end, w.size());
      d.x_start = upper.start;
      d.z_start = lower.start;
      d.y_start = lower.end;
      d.v_start = upper.end;
      if (d.verify(cnf, w, marks)) return d;
    }
  }
  throw ExtractionFailed("no repeated nonterminal on the marked path yields a valid decomposition");
}

}  // namespace qgl
