#pragma once

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "caysync/bitset.hpp"
#include "caysync/error.hpp"
#include "caysync/group.hpp"
#include "caysync/numeric.hpp"

namespace caysync {

// Directed graph over vertices 0..n-1 with bit-vector adjacency rows.
// The transpose rows are maintained alongside, so in-neighbor queries are
// as cheap as out-neighbor ones. Immutable in normal use; with_edge()
// produces an extended copy for the edge-monotonicity property test.
class Digraph {
 public:
  explicit Digraph(std::size_t n)
      : n_(n), out_(n, VertexSet(n)), in_(n, VertexSet(n)) {}

  std::size_t order() const { return n_; }

  void add_edge(std::size_t x, std::size_t y) {
    if (!out_[x].test(y)) {
      out_[x].set(y);
      in_[y].set(x);
      ++edges_;
    }
  }

  bool has_edge(std::size_t x, std::size_t y) const { return out_[x].test(y); }

  const VertexSet& out_neighbors(std::size_t x) const { return out_[x]; }
  const VertexSet& in_neighbors(std::size_t x) const { return in_[x]; }

  std::size_t out_degree(std::size_t x) const { return out_[x].count(); }
  std::size_t in_degree(std::size_t x) const { return in_[x].count(); }
  std::size_t edge_count() const { return edges_; }

  // Common in- and out-degree when the digraph is regular.
  std::optional<std::size_t> regular_degree() const {
    if (n_ == 0) return std::nullopt;
    const std::size_t h = out_degree(0);
    for (std::size_t x = 0; x < n_; ++x) {
      if (out_degree(x) != h || in_degree(x) != h) return std::nullopt;
    }
    return h;
  }

  Digraph with_edge(std::size_t x, std::size_t y) const {
    Digraph d(*this);
    d.add_edge(x, y);
    d.cyclic_symmetry_ = false;  // an arbitrary extra edge breaks translation invariance
    return d;
  }

  // Set when the digraph is a Cayley digraph of the canonical cyclic group,
  // i.e. adjacency is invariant under the translation x -> x+1 (mod n).
  bool cyclic_translation_invariant() const { return cyclic_symmetry_; }
  void mark_cyclic_translation_invariant() { cyclic_symmetry_ = true; }

 private:
  std::size_t n_ = 0;
  std::size_t edges_ = 0;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
  bool cyclic_symmetry_ = false;
};

// Cay(G, H): an edge (x, hx) for every x in G and h in H. Regular of degree
// |H|; loops at every vertex exactly when H contains the identity.
inline Digraph cayley_digraph(const Group& g, const GeneratingSet& h) {
  const auto n = static_cast<std::size_t>(g.order());
  Digraph d(n);
  for (int hi : h.elements()) {
    if (hi < 0 || hi >= g.order()) {
      throw invalid_argument_error("cayley_digraph: generator index out of range");
    }
    for (int x = 0; x < g.order(); ++x) {
      d.add_edge(static_cast<std::size_t>(x), static_cast<std::size_t>(g.mul(hi, x)));
    }
  }
  if (g.is_canonical_cyclic()) d.mark_cyclic_translation_invariant();
  return d;
}

// Number of edges into x that originate inside U.
inline std::size_t in_degree_within(const Digraph& d, std::size_t x, const VertexSet& u) {
  return d.in_neighbors(x).intersection_count(u);
}

// True iff the subdigraph induced on U has no directed cycle. A loop is a
// cycle of length 1. Kahn-style: repeatedly remove vertices whose within-U
// in-degree is zero.
inline bool is_acyclic(const Digraph& d, const VertexSet& u) {
  const std::size_t n = d.order();
  std::vector<std::size_t> indeg(n, 0);
  std::vector<std::size_t> queue;
  std::vector<bool> alive(n, false);
  u.for_each([&](std::size_t x) {
    alive[x] = true;
    indeg[x] = in_degree_within(d, x, u);
    if (indeg[x] == 0) queue.push_back(x);
  });
  std::size_t removed = 0;
  while (!queue.empty()) {
    const std::size_t x = queue.back();
    queue.pop_back();
    alive[x] = false;
    ++removed;
    d.out_neighbors(x).for_each([&](std::size_t y) {
      if (alive[y] && --indeg[y] == 0) queue.push_back(y);
    });
  }
  return removed == u.count();
}

// Length of the shortest directed cycle, or infinity if acyclic. Layered
// BFS from every start vertex; the first layer whose expansion re-reaches
// the start closes a minimal cycle through it.
inline ExtNat girth_bfs(const Digraph& d) {
  const std::size_t n = d.order();
  ExtNat best = ExtNat::infinity();
  for (std::size_t v = 0; v < n; ++v) {
    VertexSet frontier(n);
    frontier.set(v);
    VertexSet visited = frontier;
    for (std::size_t depth = 1; depth <= n; ++depth) {
      if (best.is_finite() && depth > best.value()) break;
      VertexSet next(n);
      frontier.for_each([&](std::size_t x) { next |= d.out_neighbors(x); });
      if (next.test(v)) {
        if (!best.is_finite() || depth < best.value()) best = ExtNat(depth);
        break;
      }
      next -= visited;
      if (next.empty()) break;
      visited |= next;
      frontier = next;
    }
    if (best == ExtNat(1)) break;
  }
  return best;
}

// Girth of Cay(C_p, {a, a^{k_1}, ..., a^{k_q}}), p prime, evaluated from the
// cycle-length identity: a closed walk using the generator a z times and
// a^{k_i} w_i times exists iff z + sum w_i k_i = 0 mod p, and its length is
// z + sum w_i. Minimizing over w with z = -sum(w_i k_i) mod p gives
//   p * ceil(sum w_i k_i / p) - sum w_i (k_i - 1).
// Weights range over {0..p}^q minus the all-zero tuple, and the pure-a
// cycle of length p is a separate candidate.
inline int girth_formula_cyclic(int p, const std::vector<int>& ks) {
  if (p < 2) throw invalid_argument_error("girth formula: p must be a prime >= 2");
  std::vector<int> sorted = ks;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 2 || sorted[i] > p - 1) {
      throw invalid_argument_error("girth formula: exponent out of range 2..p-1");
    }
    if (i > 0 && sorted[i] == sorted[i - 1]) {
      throw invalid_argument_error("girth formula: duplicate exponent");
    }
  }
  const auto q = ks.size();
  int best = p;  // the pure-a cycle
  std::vector<int> w(q, 0);
  while (true) {
    std::size_t pos = 0;
    while (pos < q && w[pos] == p) {
      w[pos] = 0;
      ++pos;
    }
    if (pos == q) break;
    ++w[pos];
    long long weighted = 0;
    long long walked = 0;
    for (std::size_t i = 0; i < q; ++i) {
      weighted += static_cast<long long>(w[i]) * ks[i];
      walked += w[i];
    }
    const long long ceil_np = (weighted + p - 1) / p * p;
    const long long len = ceil_np - weighted + walked;
    if (len >= 1 && len < best) best = static_cast<int>(len);
  }
  return best;
}

// The formula exactly as displayed, with every weight forced into {1..p}.
// Diagnostic only: it can miss cycles that skip a generator (the BFS oracle
// adjudicates), so callers compare it against girth_bfs and report
// mismatches rather than trusting it.
inline int girth_formula_literal(int p, const std::vector<int>& ks) {
  const auto q = ks.size();
  if (q == 0) return p;
  std::vector<int> w(q, 1);
  long long best = -1;
  while (true) {
    long long weighted = 0;
    long long walked = 0;
    for (std::size_t i = 0; i < q; ++i) {
      weighted += static_cast<long long>(w[i]) * ks[i];
      walked += w[i];
    }
    const long long ceil_np = (weighted + p - 1) / p * p;
    const long long len = ceil_np - weighted + walked;
    if (best < 0 || len < best) best = len;
    std::size_t pos = 0;
    while (pos < q && w[pos] == p) {
      w[pos] = 1;
      ++pos;
    }
    if (pos == q) break;
    ++w[pos];
  }
  return static_cast<int>(best);
}

// Maximal K subseteq U in which every vertex keeps within-K in-degree
// >= k+1. Computed by deleting vertices of within-set in-degree <= k until
// a fixpoint; the result is empty iff no such K exists. A loop contributes
// one to its own vertex's within-set in-degree.
inline VertexSet peel_core(const Digraph& d, const VertexSet& u, std::size_t k) {
  VertexSet core = u;
  bool changed = true;
  while (changed) {
    changed = false;
    VertexSet doomed(d.order());
    core.for_each([&](std::size_t x) {
      if (in_degree_within(d, x, core) <= k) doomed.set(x);
    });
    if (!doomed.empty()) {
      core -= doomed;
      changed = true;
    }
  }
  return core;
}

inline bool is_strongly_connected(const Digraph& d) {
  const std::size_t n = d.order();
  if (n == 0) return true;
  auto reach = [&](bool forward) {
    VertexSet seen(n);
    seen.set(0);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
      VertexSet next(n);
      frontier.for_each([&](std::size_t x) {
        next |= forward ? d.out_neighbors(x) : d.in_neighbors(x);
      });
      next -= seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  };
  return reach(true).is_full() && reach(false).is_full();
}

// --- Edge-list file format ------------------------------------------------
// First line "n m", then m lines "x y" for directed edges x -> y.

inline Digraph read_edge_list(std::istream& in) {
  std::size_t n = 0, m = 0;
  if (!(in >> n >> m)) throw usage_error("edge list: bad header line (want 'n m')");
  Digraph d(n);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t x = 0, y = 0;
    if (!(in >> x >> y)) throw usage_error("edge list: truncated at edge " + std::to_string(i));
    if (x >= n || y >= n) throw usage_error("edge list: vertex out of range");
    d.add_edge(x, y);
  }
  return d;
}

inline void write_edge_list(const Digraph& d, std::ostream& out) {
  out << d.order() << " " << d.edge_count() << "\n";
  for (std::size_t x = 0; x < d.order(); ++x) {
    d.out_neighbors(x).for_each([&](std::size_t y) { out << x << " " << y << "\n"; });
  }
}

}  // namespace caysync
