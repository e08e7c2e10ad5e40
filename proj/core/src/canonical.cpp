#include "fq/canonical.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace fq {

namespace {

// Branch-and-bound over permutations sigma fixing 0, minimizing the
// relabeled table sigma^-1(T(sigma(i), sigma(j))) in row-major order.
//
// Row 0 and column 0 are identity maps under every relabeling, so the scan
// walks interior cells (i, j >= 1) only. New labels are bound as cell values
// need them; giving a fresh value the next free label is the only
// lex-minimal choice (every permutation is a valid completion, so nothing
// can be blocked later), hence forced. Branching happens only when the scan
// reaches a row or column whose source element was never produced as a
// value; labels are always bound contiguously, so that row/column index
// equals the next free label.
struct CanonicalSearch {
  const CayleyGroup& g;
  int m;
  std::vector<int> new2old, old2new;
  std::vector<int> best;     // interior sequence, length (m-1)^2
  std::vector<int> current;
  std::vector<std::vector<int>> optimal;  // all sigma achieving best
  bool have_best = false;

  explicit CanonicalSearch(const CayleyGroup& group)
      : g(group),
        m(group.order),
        new2old(static_cast<std::size_t>(group.order), -1),
        old2new(static_cast<std::size_t>(group.order), -1) {
    new2old[0] = 0;
    old2new[0] = 0;
    current.reserve(static_cast<std::size_t>(m - 1) * (m - 1));
  }

  void run() { scan(1, 1, 1, false); }

  void bind(int label, int old) {
    new2old[static_cast<std::size_t>(label)] = old;
    old2new[static_cast<std::size_t>(old)] = label;
  }
  void unbind(int label, int old) {
    new2old[static_cast<std::size_t>(label)] = -1;
    old2new[static_cast<std::size_t>(old)] = -1;
  }

  // Scan from interior cell (i, j). `assigned` labels are bound. `loose`
  // means the prefix was strictly below `best` when last compared; pruning
  // is skipped then, and finish() re-compares, so staleness after a new
  // best is harmless.
  void scan(int i, int j, int assigned, bool loose) {
    if (i == m) {
      finish();
      return;
    }
    if (new2old[static_cast<std::size_t>(i)] < 0) {
      assert(i == assigned);
      for (int old = 1; old < m; ++old) {
        if (old2new[static_cast<std::size_t>(old)] >= 0) continue;
        bind(assigned, old);
        scan(i, j, assigned + 1, loose);
        unbind(assigned, old);
      }
      return;
    }
    const std::size_t prefix = current.size();
    const int si = new2old[static_cast<std::size_t>(i)];
    std::vector<std::pair<int, int>> bound;
    bool pruned = false;
    int jj = j;
    int a = assigned;
    while (jj < m && new2old[static_cast<std::size_t>(jj)] >= 0) {
      int old_val = g.mul(si, new2old[static_cast<std::size_t>(jj)]);
      int lab = old2new[static_cast<std::size_t>(old_val)];
      if (lab < 0) {
        lab = a;
        bind(a, old_val);
        bound.push_back({a, old_val});
        ++a;
      }
      if (!loose && have_best) {
        int ref = best[current.size()];
        if (lab > ref) {
          pruned = true;
          break;
        }
        if (lab < ref) loose = true;
      }
      current.push_back(lab);
      ++jj;
    }
    if (!pruned) {
      if (jj == m) {
        scan(i + 1, 1, a, loose);
      } else {
        assert(jj == a);
        for (int old = 1; old < m; ++old) {
          if (old2new[static_cast<std::size_t>(old)] >= 0) continue;
          bind(a, old);
          scan(i, jj, a + 1, loose);
          unbind(a, old);
        }
      }
    }
    for (auto it = bound.rbegin(); it != bound.rend(); ++it) unbind(it->first, it->second);
    current.resize(prefix);
  }

  void finish() {
    if (!have_best || current < best) {
      best = current;
      have_best = true;
      optimal.clear();
      optimal.push_back(new2old);
    } else if (current == best) {
      optimal.push_back(new2old);
    }
  }
};

std::vector<int> relabel_table(const CayleyGroup& g, const std::vector<int>& sigma) {
  std::vector<int> inv(static_cast<std::size_t>(g.order));
  for (int i = 0; i < g.order; ++i) inv[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] = i;
  std::vector<int> t(static_cast<std::size_t>(g.order) * g.order);
  for (int i = 0; i < g.order; ++i) {
    for (int j = 0; j < g.order; ++j) {
      t[static_cast<std::size_t>(i) * g.order + j] =
          inv[static_cast<std::size_t>(g.mul(sigma[static_cast<std::size_t>(i)],
                                             sigma[static_cast<std::size_t>(j)]))];
    }
  }
  return t;
}

}  // namespace

CanonicalForm canonical_table_form(const CayleyGroup& g) {
  CanonicalSearch search(g);
  search.run();
  CanonicalForm out;
  out.table = relabel_table(g, search.optimal.front());
  const std::vector<int>& s0 = search.optimal.front();
  std::vector<int> s0_inv(static_cast<std::size_t>(g.order));
  for (int i = 0; i < g.order; ++i) {
    s0_inv[static_cast<std::size_t>(s0[static_cast<std::size_t>(i)])] = i;
  }
  for (const auto& s : search.optimal) {
    std::vector<int> aut(static_cast<std::size_t>(g.order));
    for (int i = 0; i < g.order; ++i) {
      aut[static_cast<std::size_t>(i)] = s0_inv[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])];
    }
    out.automorphisms.push_back(std::move(aut));
  }
  std::sort(out.automorphisms.begin(), out.automorphisms.end());
  return out;
}

std::vector<int> canonical_table(const CayleyGroup& g) {
  CanonicalSearch search(g);
  search.run();
  return relabel_table(g, search.optimal.front());
}

CanonicalMarked canonical_marked_rep(const MarkedGroup& m) {
  CanonicalSearch search(m.group);
  search.run();
  CanonicalMarked out;
  out.table = relabel_table(m.group, search.optimal.front());
  bool first = true;
  for (const auto& s : search.optimal) {
    std::vector<int> inv(static_cast<std::size_t>(m.group.order));
    for (int i = 0; i < m.group.order; ++i) {
      inv[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])] = i;
    }
    std::vector<int> mk(m.marking.size());
    for (std::size_t k = 0; k < m.marking.size(); ++k) {
      mk[k] = inv[static_cast<std::size_t>(m.marking[k])];
    }
    if (first || mk < out.marking) {
      out.marking = std::move(mk);
      first = false;
    }
  }
  return out;
}

BfsForm marked_bfs_form(const MarkedGroup& m) {
  const CayleyGroup& g = m.group;
  std::vector<int> old2new(static_cast<std::size_t>(g.order), -1);
  std::vector<int> new2old;
  new2old.reserve(static_cast<std::size_t>(g.order));
  old2new[0] = 0;
  new2old.push_back(0);
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int i = 0; i < m.n_marks(); ++i) {
      for (int sign : {1, -1}) {
        int img = sign > 0 ? m.marking[static_cast<std::size_t>(i)]
                           : g.inv(m.marking[static_cast<std::size_t>(i)]);
        int y = g.mul(x, img);
        if (old2new[static_cast<std::size_t>(y)] < 0) {
          old2new[static_cast<std::size_t>(y)] = static_cast<int>(new2old.size());
          new2old.push_back(y);
          queue.push_back(y);
        }
      }
    }
  }
  if (static_cast<int>(new2old.size()) != g.order) {
    throw CayleyError(CayleyError::Code::marking_does_not_generate,
                      "marking does not generate the group");
  }
  BfsForm out;
  out.table.resize(static_cast<std::size_t>(g.order) * g.order);
  for (int i = 0; i < g.order; ++i) {
    for (int j = 0; j < g.order; ++j) {
      out.table[static_cast<std::size_t>(i) * g.order + j] =
          old2new[static_cast<std::size_t>(g.mul(new2old[static_cast<std::size_t>(i)],
                                                 new2old[static_cast<std::size_t>(j)]))];
    }
  }
  out.marking.resize(m.marking.size());
  for (std::size_t k = 0; k < m.marking.size(); ++k) {
    out.marking[k] = old2new[static_cast<std::size_t>(m.marking[k])];
  }
  return out;
}

bool marked_isomorphic(const MarkedGroup& a, const MarkedGroup& b) {
  if (a.n_marks() != b.n_marks()) {
    throw CayleyError(CayleyError::Code::arity_mismatch, "marking arities differ");
  }
  if (a.group.order != b.group.order) return false;
  return marked_bfs_form(a) == marked_bfs_form(b);
}

bool isomorphic(const CayleyGroup& a, const CayleyGroup& b) {
  if (a.order != b.order) return false;
  return canonical_table(a) == canonical_table(b);
}

}  // namespace fq
