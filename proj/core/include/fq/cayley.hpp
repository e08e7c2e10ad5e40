#ifndef FQ_CAYLEY_HPP
#define FQ_CAYLEY_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fq/words.hpp"

namespace fq {

struct Presentation;

struct CayleyError : std::runtime_error {
  enum class Code {
    no_identity,
    not_permutation_row,
    not_permutation_col,
    not_associative,
    bad_inverse,
    marking_does_not_generate,
    arity_mismatch,
    bad_index,
    bad_shape,
  };
  Code code;
  CayleyError(Code c, const std::string& what) : std::runtime_error(what), code(c) {}
};

// Finite group by multiplication table. Element 0 is the identity; the
// inverse array is derived on construction.
struct CayleyGroup {
  int order = 1;
  std::vector<int> table;  // row-major, order*order entries
  std::vector<int> inverse;

  int mul(int a, int b) const { return table[static_cast<std::size_t>(a) * order + b]; }
  int inv(int a) const { return inverse[static_cast<std::size_t>(a)]; }
  int pow(int a, long long k) const;
  int element_order(int a) const;
  int conjugate(int by, int x) const { return mul(mul(by, x), inv(by)); }

  bool operator==(const CayleyGroup& o) const {
    return order == o.order && table == o.table;
  }
};

// Validates identity at 0, Latin rows/columns and full associativity,
// then derives inverses. Throws CayleyError.
CayleyGroup validate_table(int order, const std::vector<int>& table);

struct MarkedGroup {
  CayleyGroup group;
  std::vector<int> marking;  // one element index per generator

  int n_marks() const { return static_cast<int>(marking.size()); }
};

// Full validation including the generation requirement on the marking.
MarkedGroup validate_cayley(int order, const std::vector<int>& table,
                            const std::vector<int>& marking);

CayleyGroup cyclic_group(int n);

// Z/n ⋉ (Z/2)^n with coordinates permuted cyclically. Element (shift, bits)
// is encoded as shift * 2^n + bits; identity (0,0) is index 0. Order n*2^n.
CayleyGroup finite_lamplighter(int n);
int lamplighter_element(int n, int shift, std::uint32_t bits);
std::pair<int, std::uint32_t> lamplighter_decode(int n, int index);

int evaluate_word(const MarkedGroup& m, const Word& w);

// True iff every relator evaluates to the identity under the marking.
// Arity of the presentation must match the marking.
bool is_marked_quotient(const MarkedGroup& m, const Presentation& p);

// Closure of `elems` under multiplication and inverse, sorted.
std::vector<int> subgroup_generated(const CayleyGroup& g, const std::vector<int>& elems);

bool marking_generates(const CayleyGroup& g, const std::vector<int>& marking);

bool is_conjugate_in_finite(const CayleyGroup& g, int x, int y);

std::vector<int> conjugacy_class(const CayleyGroup& g, int x);

// All normal subgroups as sorted element lists, ordered by size then
// lexicographically.
std::vector<std::vector<int>> normal_subgroups(const CayleyGroup& g);

// Quotient by a normal subgroup: table over cosets with the identity coset
// at index 0, plus the projection map. Throws if N is not normal.
std::pair<CayleyGroup, std::vector<int>> quotient_group(const CayleyGroup& g,
                                                        const std::vector<int>& n);

}  // namespace fq

#endif
