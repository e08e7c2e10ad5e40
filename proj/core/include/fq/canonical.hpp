#ifndef FQ_CANONICAL_HPP
#define FQ_CANONICAL_HPP

#include <vector>

#include "fq/cayley.hpp"

namespace fq {

// Lexicographically least relabeling of a multiplication table over all
// element permutations fixing the identity, plus the automorphisms of that
// canonical table. Two groups are isomorphic iff their canonical tables are
// equal.
struct CanonicalForm {
  std::vector<int> table;
  std::vector<std::vector<int>> automorphisms;  // permutations preserving `table`
};

CanonicalForm canonical_table_form(const CayleyGroup& g);

std::vector<int> canonical_table(const CayleyGroup& g);

// Canonical representative of a marked-isomorphism class: the canonical
// table together with the lexicographically least marking over all
// relabelings that realize it.
struct CanonicalMarked {
  std::vector<int> table;
  std::vector<int> marking;

  bool operator==(const CanonicalMarked&) const = default;
  bool operator<(const CanonicalMarked& o) const {
    if (table.size() != o.table.size()) return table.size() < o.table.size();
    if (table != o.table) return table < o.table;
    return marking < o.marking;
  }
};

CanonicalMarked canonical_marked_rep(const MarkedGroup& m);

// Cheap canonical form for marked groups only: relabel by breadth-first
// discovery order from the marking. Agrees between two marked groups iff
// they are marked-isomorphic.
struct BfsForm {
  std::vector<int> table;
  std::vector<int> marking;
  bool operator==(const BfsForm&) const = default;
};

BfsForm marked_bfs_form(const MarkedGroup& m);

bool marked_isomorphic(const MarkedGroup& a, const MarkedGroup& b);

bool isomorphic(const CayleyGroup& a, const CayleyGroup& b);

}  // namespace fq

#endif
