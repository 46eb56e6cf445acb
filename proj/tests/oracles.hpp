// Brute-force reference implementations. Deliberately naive: every oracle
// works straight from the definition and shares no code with the library
// beyond Graph and VertexSet.
#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "cak/gen.hpp"
#include "cak/graph.hpp"
#include "cak/leafroot.hpp"

namespace oracle {

using cak::Edge;
using cak::Graph;
using cak::VertexSet;

inline Graph from_edges(int n, std::vector<std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({u, v});
  return Graph(n, edges);
}

inline Graph path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return from_edges(n, e);
}

inline Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
  return from_edges(n, e);
}

inline Graph complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return from_edges(n, e);
}

/// Hub 0..k-1, rim k..2k-1; hub i sees rim i and rim i+1.
inline Graph sun(int k) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
  for (int i = 0; i < k; ++i) {
    e.emplace_back(i, k + i);
    e.emplace_back(i, k + (i + 1) % k);
  }
  return from_edges(2 * k, e);
}

/// Path 0-1-2-3 plus 4 adjacent to all of it.
inline Graph gem() { return from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}}); }

/// Triangle 0-1-2 with pendants 3 at 0 and 4 at 1.
inline Graph bull() { return from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}}); }

inline Graph random_graph(int n, double p, std::uint64_t seed, std::uint64_t index) {
  cak::Rng rng(seed, index);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.bernoulli(p)) e.push_back({i, j});
  return Graph(n, e);
}

inline std::vector<VertexSet> subsets(int n) {
  std::vector<VertexSet> out;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    VertexSet s;
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1U) s.insert(v);
    out.push_back(s);
  }
  return out;
}

inline bool clique(const Graph& g, const VertexSet& s) {
  for (int u : s)
    for (int v : s)
      if (u < v && !g.adjacent(u, v)) return false;
  return true;
}

/// Some vertex subset of size >= 4 induces a connected 2-regular graph.
inline bool has_hole(const Graph& g) {
  for (const auto& s : subsets(g.order())) {
    if (s.size() < 4) continue;
    bool two_regular = true;
    for (int v : s)
      if ((g.neighbors(v) & s).size() != 2) two_regular = false;
    if (!two_regular) continue;
    VertexSet seen{s.first()};
    std::vector<int> stack{s.first()};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : g.neighbors(v) & s)
        if (!seen.contains(u)) seen.insert(u), stack.push_back(u);
    }
    if (seen == s) return true;
  }
  return false;
}

inline std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> all;
  for (const auto& s : subsets(g.order()))
    if (clique(g, s)) all.push_back(s);
  std::vector<VertexSet> out;
  for (const auto& s : all) {
    bool maximal = true;
    for (const auto& t : all)
      if (s.is_proper_subset_of(t)) maximal = false;
    if (maximal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Ordered hub/rim tuples matching the k-sun adjacency exactly.
inline bool has_sun(const Graph& g, int max_vertices) {
  const int n = g.order();
  for (int k = 3; 2 * k <= std::min(n, max_vertices); ++k) {
    std::vector<int> hub(k), rim(k);
    std::vector<char> used(n, 0);
    std::function<bool(int)> place = [&](int slot) -> bool {
      if (slot == 2 * k) return true;
      for (int v = 0; v < n; ++v) {
        if (used[v]) continue;
        bool ok = true;
        if (slot < k) {
          for (int i = 0; i < slot && ok; ++i) ok = g.adjacent(v, hub[i]);
        } else {
          int j = slot - k;
          for (int i = 0; i < j && ok; ++i) ok = !g.adjacent(v, rim[i]);
          for (int i = 0; i < k && ok; ++i) ok = g.adjacent(v, hub[i]) == (i == j || (i + 1) % k == j);
        }
        if (!ok) continue;
        (slot < k ? hub[slot] : rim[slot - k]) = v;
        used[v] = 1;
        if (place(slot + 1)) return true;
        used[v] = 0;
      }
      return false;
    };
    if (place(0)) return true;
  }
  return false;
}

/// Induced P4 plus a vertex adjacent to all four.
inline bool has_gem(const Graph& g) {
  const int n = g.order();
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int d = 0; d < n; ++d)
          for (int e = 0; e < n; ++e) {
            std::array<int, 5> vs{c, a, b, d, e};
            std::set<int> distinct(vs.begin(), vs.end());
            if (distinct.size() != 5) continue;
            bool ok = g.adjacent(a, b) && g.adjacent(b, d) && g.adjacent(d, e) && !g.adjacent(a, d) &&
                      !g.adjacent(a, e) && !g.adjacent(b, e);
            for (int x : {a, b, d, e}) ok = ok && g.adjacent(c, x);
            if (ok) return true;
          }
  return false;
}

/// Arrangement by definition: every nonempty intersection of a nonempty
/// family of maximal cliques; arcs are the covers of strict inclusion.
struct Arrangement {
  std::vector<VertexSet> nodes;
  std::set<std::pair<int, int>> arcs;
  std::vector<int> sinks;

  int index(const VertexSet& s) const {
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
      if (nodes[i] == s) return i;
    return -1;
  }
  bool covered_path(int from, int to, const std::set<int>& avoid) const {
    if (avoid.count(from) || avoid.count(to)) return false;
    std::set<int> seen{from};
    std::vector<int> stack{from};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (x == to) return true;
      for (auto [p, q] : arcs)
        if (p == x && !avoid.count(q) && !seen.count(q)) seen.insert(q), stack.push_back(q);
    }
    return false;
  }
};

inline Arrangement arrangement(const Graph& g) {
  Arrangement a;
  const auto cliques = oracle::maximal_cliques(g);
  const int c = static_cast<int>(cliques.size());
  std::set<VertexSet> nodes;
  for (std::uint32_t mask = 1; mask < (1U << c); ++mask) {
    VertexSet meet = VertexSet::range(g.order());
    for (int i = 0; i < c; ++i)
      if ((mask >> i) & 1U) meet &= cliques[i];
    if (!meet.empty()) nodes.insert(meet);
  }
  a.nodes.assign(nodes.begin(), nodes.end());
  const int m = static_cast<int>(a.nodes.size());
  for (int x = 0; x < m; ++x)
    for (int z = 0; z < m; ++z) {
      if (!a.nodes[x].is_proper_subset_of(a.nodes[z])) continue;
      bool cover = true;
      for (int y = 0; y < m && cover; ++y)
        if (a.nodes[x].is_proper_subset_of(a.nodes[y]) && a.nodes[y].is_proper_subset_of(a.nodes[z])) cover = false;
      if (cover) a.arcs.insert({x, z});
    }
  for (const auto& q : cliques) a.sinks.push_back(a.index(q));
  return a;
}

struct Bad2Sums {
  int terminals = 0;
  int starters = 0;
};

/// Smallest |T0|+|T1|, then largest |S0|+|S1|, over all bad 2-cycles by
/// definition (every node 4-tuple, DFS with the interval deleted).
inline std::optional<Bad2Sums> bad_2_cycle(const Graph& g) {
  const auto a = arrangement(g);
  const int m = static_cast<int>(a.nodes.size());
  std::optional<Bad2Sums> best;
  for (int t0 = 0; t0 < m; ++t0)
    for (int t1 = 0; t1 < m; ++t1) {
      if (t0 == t1) continue;
      const VertexSet t = a.nodes[t0] & a.nodes[t1];
      if (t.empty()) continue;
      for (int s0 = 0; s0 < m; ++s0)
        for (int s1 = 0; s1 < m; ++s1) {
          if (s0 == s1) continue;
          const VertexSet low = a.nodes[s0] | a.nodes[s1];
          if (!low.is_subset_of(t)) continue;
          std::set<int> avoid;
          for (int x = 0; x < m; ++x)
            if (low.is_subset_of(a.nodes[x]) && a.nodes[x].is_subset_of(t)) avoid.insert(x);
          bool bad = true;
          for (int s : {s0, s1})
            for (int tt : {t0, t1}) bad = bad && a.covered_path(s, tt, avoid);
          if (!bad) continue;
          Bad2Sums sums{a.nodes[t0].size() + a.nodes[t1].size(), a.nodes[s0].size() + a.nodes[s1].size()};
          if (!best || sums.terminals < best->terminals ||
              (sums.terminals == best->terminals && sums.starters > best->starters))
            best = sums;
        }
    }
  return best;
}

/// Some k-tuple of starters and terminals with S_i ⊆ T_j exactly when j is
/// i or i-1 mod k (reachability is inclusion in an arrangement).
inline bool has_bad_k_cycle(const Graph& g, int k) {
  const auto a = arrangement(g);
  const int m = static_cast<int>(a.nodes.size());
  std::vector<int> s(k), t(k);
  std::function<bool(int)> rec = [&](int slot) -> bool {
    if (slot == 2 * k) return true;
    for (int x = 0; x < m; ++x) {
      auto& list = slot < k ? t : s;
      int pos = slot < k ? slot : slot - k;
      if (std::find(list.begin(), list.begin() + pos, x) != list.begin() + pos) continue;
      list[pos] = x;
      bool ok = true;
      if (slot >= k)
        for (int j = 0; j < k && ok; ++j) {
          bool want = j == pos || j == (pos + k - 1) % k;
          ok = a.nodes[x].is_subset_of(a.nodes[t[j]]) == want;
        }
      if (ok && rec(slot + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

/// Every injective map of the pattern into the host, pruned only by
/// adjacency agreement with already-placed vertices.
inline bool contains_induced(const Graph& host, const Graph& pattern) {
  const int p = pattern.order();
  std::vector<int> map(p, -1);
  std::vector<char> used(host.order(), 0);
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == p) return true;
    for (int v = 0; v < host.order(); ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = host.adjacent(v, map[j]) == pattern.adjacent(i, j);
      if (!ok) continue;
      map[i] = v;
      used[v] = 1;
      if (rec(i + 1)) return true;
      used[v] = 0;
    }
    return false;
  };
  return rec(0);
}

/// All-pairs tree distances by Floyd-Warshall on the node set.
inline std::vector<std::vector<long long>> tree_distances(const cak::LeafRootModel& m) {
  const long long inf = 1LL << 50;
  std::vector<std::vector<long long>> d(m.nodes, std::vector<long long>(m.nodes, inf));
  for (int i = 0; i < m.nodes; ++i) d[i][i] = 0;
  for (const auto& e : m.edges) d[e.p][e.q] = d[e.q][e.p] = e.weight;
  for (int k = 0; k < m.nodes; ++k)
    for (int i = 0; i < m.nodes; ++i)
      for (int j = 0; j < m.nodes; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline bool is_leaf_root(const Graph& g, const cak::LeafRootModel& m) {
  const auto d = tree_distances(m);
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v) != (d[m.leaf_of[u]][m.leaf_of[v]] <= m.k)) return false;
  return true;
}

}  // namespace oracle
