#ifndef FQ_ENUMERATION_HPP
#define FQ_ENUMERATION_HPP

#include <memory>
#include <optional>
#include <vector>

#include "fq/canonical.hpp"
#include "fq/cayley.hpp"

namespace fq {

struct CapExceededError : std::runtime_error {
  int requested;
  int cap;
  CapExceededError(int req, int c)
      : std::runtime_error("max order " + std::to_string(req) +
                           " exceeds feasibility cap " + std::to_string(c)),
        requested(req),
        cap(c) {}
};

struct EnumerationLimits {
  int feasibility_cap = 12;
  int threads = 1;
};

// All groups of the given order, one per isomorphism class, as canonical
// tables in lexicographic order, with their automorphism groups.
struct GroupClass {
  CayleyGroup group;  // canonical table
  std::vector<std::vector<int>> automorphisms;
};

const std::vector<GroupClass>& groups_of_order(int order);

std::vector<CayleyGroup> enumerate_groups(int order);

// Isomorphism-class counts for orders 1..max_order.
std::vector<int> group_census(int max_order, const EnumerationLimits& limits = {});

// Independent census cross-check: closures of generator tuples of
// permutations acting on max_order points (1, 2 and 3 element tuples).
std::vector<int> group_census_tuple_images(int max_order,
                                           const EnumerationLimits& limits = {});

// Marked finite groups in nondecreasing order of group order, one entry per
// marked-isomorphism class, deterministically ordered by (order, canonical
// table, canonical marking).
struct QuotientList {
  int n_generators = 0;
  int max_order = 0;
  std::vector<MarkedGroup> entries;
};

QuotientList enumerate_marked_groups(int n_generators, int max_order,
                                     const EnumerationLimits& limits = {});

// Cross-check backend: marked groups realized as closures of permutation
// tuples on max_order points. Supports small ranks only.
QuotientList enumerate_marked_groups_tuple_images(int n_generators, int max_order,
                                                  const EnumerationLimits& limits = {});

// Marked groups of one exact order, same canonical per-order ordering.
std::vector<MarkedGroup> marked_groups_of_order(int n_generators, int order);

// Lazy order-by-order walk used by the semidecision searches.
class MarkedGroupStream {
 public:
  MarkedGroupStream(int n_generators, int max_order, const EnumerationLimits& limits);

  // nullptr once every order up to max_order is exhausted
  const MarkedGroup* next();

 private:
  int n_generators_;
  int max_order_;
  int order_ = 0;
  std::size_t index_ = 0;
  std::vector<MarkedGroup> current_;
};

}  // namespace fq

#endif
