#include "fq/cayley.hpp"

#include <algorithm>
#include <numeric>

#include "fq/presentation.hpp"

namespace fq {

int CayleyGroup::pow(int a, long long k) const {
  int base = k >= 0 ? a : inv(a);
  long long reps = k >= 0 ? k : -k;
  int acc = 0;
  while (reps > 0) {
    // linear walk; orders here are tiny
    acc = mul(acc, base);
    --reps;
  }
  return acc;
}

int CayleyGroup::element_order(int a) const {
  int acc = a;
  int ord = 1;
  while (acc != 0) {
    acc = mul(acc, a);
    ++ord;
  }
  return ord;
}

CayleyGroup validate_table(int order, const std::vector<int>& table) {
  if (order < 1) throw CayleyError(CayleyError::Code::bad_shape, "order must be >= 1");
  if (static_cast<int>(table.size()) != order * order) {
    throw CayleyError(CayleyError::Code::bad_shape, "table must be order x order");
  }
  for (int v : table) {
    if (v < 0 || v >= order) {
      throw CayleyError(CayleyError::Code::bad_index, "table entry out of range");
    }
  }
  CayleyGroup g;
  g.order = order;
  g.table = table;
  for (int i = 0; i < order; ++i) {
    if (g.mul(0, i) != i || g.mul(i, 0) != i) {
      throw CayleyError(CayleyError::Code::no_identity, "element 0 is not an identity");
    }
  }
  for (int i = 0; i < order; ++i) {
    std::vector<bool> row(static_cast<std::size_t>(order), false);
    std::vector<bool> col(static_cast<std::size_t>(order), false);
    for (int j = 0; j < order; ++j) {
      if (row[static_cast<std::size_t>(g.mul(i, j))]) {
        throw CayleyError(CayleyError::Code::not_permutation_row,
                          "row " + std::to_string(i) + " is not a permutation");
      }
      row[static_cast<std::size_t>(g.mul(i, j))] = true;
      if (col[static_cast<std::size_t>(g.mul(j, i))]) {
        throw CayleyError(CayleyError::Code::not_permutation_col,
                          "column " + std::to_string(i) + " is not a permutation");
      }
      col[static_cast<std::size_t>(g.mul(j, i))] = true;
    }
  }
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      int ab = g.mul(a, b);
      for (int c = 0; c < order; ++c) {
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) {
          throw CayleyError(CayleyError::Code::not_associative,
                            "not associative at (" + std::to_string(a) + "," +
                                std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  g.inverse.assign(static_cast<std::size_t>(order), -1);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      if (g.mul(a, b) == 0) {
        g.inverse[static_cast<std::size_t>(a)] = b;
        break;
      }
    }
    if (g.inverse[static_cast<std::size_t>(a)] < 0) {
      throw CayleyError(CayleyError::Code::bad_inverse, "missing inverse");
    }
  }
  return g;
}

MarkedGroup validate_cayley(int order, const std::vector<int>& table,
                            const std::vector<int>& marking) {
  CayleyGroup g = validate_table(order, table);
  for (int v : marking) {
    if (v < 0 || v >= order) {
      throw CayleyError(CayleyError::Code::bad_index, "marking entry out of range");
    }
  }
  if (!marking_generates(g, marking)) {
    throw CayleyError(CayleyError::Code::marking_does_not_generate,
                      "marking does not generate the group");
  }
  return MarkedGroup{std::move(g), marking};
}

CayleyGroup cyclic_group(int n) {
  if (n < 1) throw CayleyError(CayleyError::Code::bad_shape, "order must be >= 1");
  CayleyGroup g;
  g.order = n;
  g.table.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) g.table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  }
  g.inverse.resize(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) g.inverse[static_cast<std::size_t>(a)] = (n - a) % n;
  return g;
}

int lamplighter_element(int n, int shift, std::uint32_t bits) {
  shift %= n;
  if (shift < 0) shift += n;
  return shift * (1 << n) + static_cast<int>(bits);
}

std::pair<int, std::uint32_t> lamplighter_decode(int n, int index) {
  return {index >> n, static_cast<std::uint32_t>(index) & ((1u << n) - 1)};
}

namespace {
std::uint32_t rotate_bits(std::uint32_t bits, int by, int n) {
  // position j of the result is position (j + by) mod n of the input
  by %= n;
  if (by < 0) by += n;
  std::uint32_t mask = (1u << n) - 1;
  return ((bits >> by) | (bits << (n - by))) & mask;
}
}  // namespace

CayleyGroup finite_lamplighter(int n) {
  if (n < 1) throw CayleyError(CayleyError::Code::bad_shape, "order must be >= 1");
  if (n > 20) throw CayleyError(CayleyError::Code::bad_shape, "lamplighter size too large");
  int m = n * (1 << n);
  CayleyGroup g;
  g.order = m;
  g.table.resize(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    auto [alpha, s] = lamplighter_decode(n, i);
    for (int j = 0; j < m; ++j) {
      auto [beta, t] = lamplighter_decode(n, j);
      // (alpha, S)(beta, T) = (alpha+beta, (S - beta) xor T)
      std::uint32_t lamps = rotate_bits(s, beta, n) ^ t;
      g.table[static_cast<std::size_t>(i) * m + j] =
          lamplighter_element(n, alpha + beta, lamps);
    }
  }
  g.inverse.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    auto [alpha, s] = lamplighter_decode(n, i);
    g.inverse[static_cast<std::size_t>(i)] =
        lamplighter_element(n, -alpha, rotate_bits(s, -alpha, n));
  }
  return g;
}

int evaluate_word(const MarkedGroup& m, const Word& w) {
  if (!word_in_range(w, m.n_marks())) {
    throw CayleyError(CayleyError::Code::bad_index, "word uses generator outside marking");
  }
  int acc = 0;
  for (const Letter& l : w) {
    int img = m.marking[static_cast<std::size_t>(l.gen)];
    if (l.sign < 0) img = m.group.inv(img);
    acc = m.group.mul(acc, img);
  }
  return acc;
}

bool is_marked_quotient(const MarkedGroup& m, const Presentation& p) {
  if (p.rank() != m.n_marks()) {
    throw CayleyError(CayleyError::Code::arity_mismatch,
                      "presentation rank does not match marking");
  }
  for (const Word& r : p.relators) {
    if (evaluate_word(m, r) != 0) return false;
  }
  return true;
}

std::vector<int> subgroup_generated(const CayleyGroup& g, const std::vector<int>& elems) {
  std::vector<bool> in(static_cast<std::size_t>(g.order), false);
  in[0] = true;
  std::vector<int> stack{0};
  for (int e : elems) {
    if (e < 0 || e >= g.order) {
      throw CayleyError(CayleyError::Code::bad_index, "element out of range");
    }
    if (!in[static_cast<std::size_t>(e)]) {
      in[static_cast<std::size_t>(e)] = true;
      stack.push_back(e);
    }
  }
  std::vector<int> members = stack;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (int y : {g.mul(x, members[i]), g.mul(members[i], x)}) {
        if (!in[static_cast<std::size_t>(y)]) {
          in[static_cast<std::size_t>(y)] = true;
          stack.push_back(y);
          members.push_back(y);
        }
      }
    }
    int xi = g.inv(x);
    if (!in[static_cast<std::size_t>(xi)]) {
      in[static_cast<std::size_t>(xi)] = true;
      stack.push_back(xi);
      members.push_back(xi);
    }
  }
  std::vector<int> out;
  for (int i = 0; i < g.order; ++i) {
    if (in[static_cast<std::size_t>(i)]) out.push_back(i);
  }
  return out;
}

bool marking_generates(const CayleyGroup& g, const std::vector<int>& marking) {
  return static_cast<int>(subgroup_generated(g, marking).size()) == g.order;
}

bool is_conjugate_in_finite(const CayleyGroup& g, int x, int y) {
  for (int c = 0; c < g.order; ++c) {
    if (g.conjugate(c, x) == y) return true;
  }
  return false;
}

std::vector<int> conjugacy_class(const CayleyGroup& g, int x) {
  std::vector<bool> in(static_cast<std::size_t>(g.order), false);
  for (int c = 0; c < g.order; ++c) in[static_cast<std::size_t>(g.conjugate(c, x))] = true;
  std::vector<int> out;
  for (int i = 0; i < g.order; ++i) {
    if (in[static_cast<std::size_t>(i)]) out.push_back(i);
  }
  return out;
}

namespace {

bool subgroup_is_normal(const CayleyGroup& g, const std::vector<bool>& in) {
  for (int x = 0; x < g.order; ++x) {
    if (!in[static_cast<std::size_t>(x)]) continue;
    for (int c = 0; c < g.order; ++c) {
      if (!in[static_cast<std::size_t>(g.conjugate(c, x))]) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::vector<int>> normal_subgroups(const CayleyGroup& g) {
  // normal subgroups are unions of conjugacy classes closed under the group
  // operations; grow closures from each subset of class representatives
  std::vector<std::vector<int>> classes;
  std::vector<bool> covered(static_cast<std::size_t>(g.order), false);
  for (int x = 0; x < g.order; ++x) {
    if (covered[static_cast<std::size_t>(x)]) continue;
    auto cls = conjugacy_class(g, x);
    for (int y : cls) covered[static_cast<std::size_t>(y)] = true;
    classes.push_back(std::move(cls));
  }
  std::vector<std::vector<int>> found;
  std::vector<std::vector<int>> seen_sets;
  // breadth-first over closures: start from {e}, extend by one class at a time
  std::vector<std::vector<int>> frontier{subgroup_generated(g, {})};
  seen_sets.push_back(frontier[0]);
  found.push_back(frontier[0]);
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& base : frontier) {
      for (const auto& cls : classes) {
        std::vector<int> gens = base;
        gens.insert(gens.end(), cls.begin(), cls.end());
        std::vector<int> closure = subgroup_generated(g, gens);
        if (std::find(seen_sets.begin(), seen_sets.end(), closure) != seen_sets.end()) {
          continue;
        }
        seen_sets.push_back(closure);
        std::vector<bool> in(static_cast<std::size_t>(g.order), false);
        for (int e : closure) in[static_cast<std::size_t>(e)] = true;
        if (subgroup_is_normal(g, in)) found.push_back(closure);
        next.push_back(std::move(closure));
      }
    }
    frontier = std::move(next);
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

std::pair<CayleyGroup, std::vector<int>> quotient_group(const CayleyGroup& g,
                                                        const std::vector<int>& n) {
  std::vector<bool> in(static_cast<std::size_t>(g.order), false);
  for (int e : n) {
    if (e < 0 || e >= g.order) {
      throw CayleyError(CayleyError::Code::bad_index, "element out of range");
    }
    in[static_cast<std::size_t>(e)] = true;
  }
  if (!in[0] || subgroup_generated(g, n) != n || !subgroup_is_normal(g, in)) {
    throw CayleyError(CayleyError::Code::bad_shape, "not a normal subgroup");
  }
  std::vector<int> coset(static_cast<std::size_t>(g.order), -1);
  int n_cosets = 0;
  // identity coset first, then sweep in element order for determinism
  for (int x = 0; x < g.order; ++x) {
    if (coset[static_cast<std::size_t>(x)] >= 0) continue;
    int id = n_cosets++;
    for (int h : n) coset[static_cast<std::size_t>(g.mul(x, h))] = id;
  }
  CayleyGroup q;
  q.order = n_cosets;
  q.table.assign(static_cast<std::size_t>(n_cosets) * n_cosets, -1);
  std::vector<int> rep(static_cast<std::size_t>(n_cosets), -1);
  for (int x = 0; x < g.order; ++x) {
    std::size_t c = static_cast<std::size_t>(coset[static_cast<std::size_t>(x)]);
    if (rep[c] < 0) rep[c] = x;
  }
  for (int a = 0; a < n_cosets; ++a) {
    for (int b = 0; b < n_cosets; ++b) {
      q.table[static_cast<std::size_t>(a) * n_cosets + b] =
          coset[static_cast<std::size_t>(g.mul(rep[static_cast<std::size_t>(a)],
                                               rep[static_cast<std::size_t>(b)]))];
    }
  }
  q.inverse.resize(static_cast<std::size_t>(n_cosets));
  for (int a = 0; a < n_cosets; ++a) {
    for (int b = 0; b < n_cosets; ++b) {
      if (q.table[static_cast<std::size_t>(a) * n_cosets + b] == 0) {
        q.inverse[static_cast<std::size_t>(a)] = b;
        break;
      }
    }
  }
  return {std::move(q), std::move(coset)};
}

}  // namespace fq
