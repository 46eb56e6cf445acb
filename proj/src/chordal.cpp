#include "cak/chordal.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace cak {

std::vector<int> lex_bfs(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> label(n);
  std::vector<char> done(n, 0);
  std::vector<int> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (done[v]) continue;
      if (best < 0 || label[v] > label[best]) best = v;
    }
    done[best] = 1;
    order.push_back(best);
    for (int w : g.neighbors(best))
      if (!done[w]) label[w].push_back(n - step);
  }
  return order;
}

bool is_perfect_elimination_order(const Graph& g, const std::vector<int>& order) {
  const int n = g.order();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    if (order[i] < 0 || order[i] >= n || pos[order[i]] >= 0) return false;
    pos[order[i]] = i;
  }
  VertexSet later = g.vertices();
  for (int v : order) {
    later.erase(v);
    if (!is_clique(g, g.neighbors(v) & later)) return false;
  }
  return true;
}

namespace {

/// Shortest u-w path avoiding `blocked`, or empty.
std::vector<int> shortest_path(const Graph& g, int u, int w, const VertexSet& blocked) {
  std::vector<int> parent(g.order(), -1);
  std::deque<int> queue{u};
  parent[u] = u;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    if (x == w) break;
    for (int y : g.neighbors(x)) {
      if (parent[y] >= 0 || blocked.contains(y)) continue;
      parent[y] = x;
      queue.push_back(y);
    }
  }
  if (parent[w] < 0) return {};
  std::vector<int> path;
  for (int x = w; x != u; x = parent[x]) path.push_back(x);
  path.push_back(u);
  std::reverse(path.begin(), path.end());
  return path;
}

HoleWitness find_hole(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    auto nv = g.neighbors(v);
    for (int u : nv) {
      for (int w : nv) {
        if (w <= u || g.adjacent(u, w)) continue;
        auto blocked = nv;
        blocked.insert(v);
        blocked.erase(u);
        blocked.erase(w);
        auto path = shortest_path(g, u, w, blocked);
        if (path.empty()) continue;
        HoleWitness hole;
        hole.cycle.push_back(v);
        hole.cycle.insert(hole.cycle.end(), path.begin(), path.end());
        return hole;
      }
    }
  }
  throw InvariantViolation("chordality", "elimination order failed but no hole was found");
}

}  // namespace

std::variant<EliminationOrder, HoleWitness> chordality(const Graph& g) {
  auto visit = lex_bfs(g);
  std::vector<int> peo(visit.rbegin(), visit.rend());
  if (is_perfect_elimination_order(g, peo)) return EliminationOrder{std::move(peo), OrderKind::perfect};
  return find_hole(g);
}

bool is_chordal(const Graph& g) {
  return std::holds_alternative<EliminationOrder>(chordality(g));
}

std::vector<VertexSet> maximal_cliques(const Graph& g, const EliminationOrder& peo) {
  if (!is_perfect_elimination_order(g, peo.order))
    throw PreconditionError("maximal_cliques: order is not a perfect elimination order");
  std::vector<VertexSet> candidates;
  VertexSet later = g.vertices();
  for (int v : peo.order) {
    auto c = g.neighbors(v) & later;
    c.insert(v);
    later.erase(v);
    candidates.push_back(c);
  }
  std::vector<VertexSet> out;
  for (const auto& c : candidates) {
    bool dominated = std::any_of(candidates.begin(), candidates.end(),
                                 [&](const VertexSet& d) { return c.is_proper_subset_of(d); });
    if (!dominated && std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  auto result = chordality(g);
  if (auto* peo = std::get_if<EliminationOrder>(&result)) return maximal_cliques(g, *peo);
  throw PreconditionError("maximal_cliques: graph is not chordal");
}

namespace {

void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x, std::vector<VertexSet>& out) {
  if (p.empty()) {
    if (x.empty() && !r.empty()) out.push_back(r);
    return;
  }
  int pivot = -1, best = -1;
  for (int u : p | x) {
    int c = (p & g.neighbors(u)).size();
    if (c > best) best = c, pivot = u;
  }
  for (int v : p - g.neighbors(pivot)) {
    auto rv = r;
    rv.insert(v);
    bron_kerbosch(g, rv, p & g.neighbors(v), x & g.neighbors(v), out);
    p.erase(v);
    x.insert(v);
  }
}

}  // namespace

std::vector<VertexSet> all_maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  if (g.order() == 0) return out;
  bron_kerbosch(g, {}, g.vertices(), {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

/// Compare two 0/1 vectors read through `index`, last position most significant.
template <class A, class B>
int compare_reversed(const std::vector<int>& index, A&& a, B&& b) {
  for (auto it = index.rbegin(); it != index.rend(); ++it) {
    bool x = a(*it), y = b(*it);
    if (x != y) return x ? 1 : -1;
  }
  return 0;
}

}  // namespace

DoublyLexicalOrdering doubly_lexical_ordering(const Graph& g) {
  const int n = g.order();
  std::vector<VertexSet> closed(n);
  for (int v = 0; v < n; ++v) closed[v] = neighborhood(g, v, true);
  DoublyLexicalOrdering dlo;
  dlo.rows.resize(n);
  dlo.columns.resize(n);
  std::iota(dlo.rows.begin(), dlo.rows.end(), 0);
  std::iota(dlo.columns.begin(), dlo.columns.end(), 0);

  // Alternate stable sorts of rows and columns until neither moves; the
  // fixpoint has both rows and columns in nondecreasing reversed-lex order.
  for (int round = 0; round < 4 * n + 8; ++round) {
    auto rows = dlo.rows;
    std::stable_sort(rows.begin(), rows.end(), [&](int r1, int r2) {
      return compare_reversed(dlo.columns, [&](int c) { return closed[r1].contains(c); },
                              [&](int c) { return closed[r2].contains(c); }) < 0;
    });
    auto cols = dlo.columns;
    std::stable_sort(cols.begin(), cols.end(), [&](int c1, int c2) {
      return compare_reversed(rows, [&](int r) { return closed[r].contains(c1); },
                              [&](int r) { return closed[r].contains(c2); }) < 0;
    });
    bool stable = rows == dlo.rows && cols == dlo.columns;
    dlo.rows = std::move(rows);
    dlo.columns = std::move(cols);
    if (stable) return dlo;
  }
  throw InvariantViolation("doubly-lexical", "row/column refinement did not converge");
}

namespace {

bool gamma_free(const Graph& g, const DoublyLexicalOrdering& dlo) {
  const int n = g.order();
  // bit(i, j): entry at row position i, column position j.
  std::vector<std::vector<char>> m(n, std::vector<char>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int r = dlo.rows[i], c = dlo.columns[j];
      m[i][j] = r == c || g.adjacent(r, c);
    }
  // Γ = [[1,1],[1,0]] on rows i1<i2, columns j1<j2.
  for (int i1 = 0; i1 < n; ++i1)
    for (int i2 = i1 + 1; i2 < n; ++i2)
      for (int j1 = 0; j1 < n; ++j1) {
        if (!m[i1][j1] || !m[i2][j1]) continue;
        for (int j2 = j1 + 1; j2 < n; ++j2)
          if (m[i1][j2] && !m[i2][j2]) return false;
      }
  return true;
}

bool is_strong_elimination_order(const Graph& g, const std::vector<int>& order) {
  const int n = g.order();
  auto closed = [&](int a, int b) { return a == b || g.adjacent(a, b); };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        int vi = order[i], vj = order[j], vk = order[k];
        if (!closed(vi, vk) || !closed(vj, vk)) continue;
        for (int l = k + 1; l < n; ++l) {
          int vl = order[l];
          if (closed(vi, vl) && !closed(vj, vl)) return false;
        }
      }
  return true;
}

}  // namespace

std::optional<EliminationOrder> strong_elimination_order(const Graph& g) {
  // Eliminate simple vertices. Each elimination fixes the order among the
  // eliminated vertex's neighbours: a strictly smaller closed neighbourhood
  // (in the remaining graph) must come first.
  if (!is_strongly_chordal(g)) return std::nullopt;
  const int n = g.order();
  std::vector<VertexSet> before(n);
  VertexSet alive = g.vertices();
  EliminationOrder out{{}, OrderKind::strong};
  while (!alive.empty()) {
    int pick = -1;
    for (int v : alive) {
      if (!(before[v] & alive).empty()) continue;
      std::vector<VertexSet> hoods;
      for (int u : neighborhood(g, v, true) & alive) hoods.push_back(neighborhood(g, u, true) & alive);
      std::sort(hoods.begin(), hoods.end(), [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
      bool chain = true;
      for (std::size_t i = 1; i < hoods.size() && chain; ++i) chain = hoods[i - 1].is_subset_of(hoods[i]);
      if (chain) {
        pick = v;
        break;
      }
    }
    if (pick < 0) throw InvariantViolation("strong-elimination", "no eligible simple vertex");
    const auto nv = neighborhood(g, pick, false) & alive;
    for (int u : nv) {
      const auto hu = neighborhood(g, u, true) & alive;
      for (int w : nv)
        if (u != w && hu.is_proper_subset_of(neighborhood(g, w, true) & alive)) before[w].insert(u);
    }
    out.order.push_back(pick);
    alive.erase(pick);
  }
  if (!is_strong_elimination_order(g, out.order))
    throw InvariantViolation("strong-elimination", "order failed verification");
  return out;
}

bool is_strongly_chordal(const Graph& g) {
  if (!is_chordal(g)) return false;
  return gamma_free(g, doubly_lexical_ordering(g));
}

namespace {

struct SunSearch {
  const Graph& g;
  int k;
  std::uint64_t budget;
  std::uint64_t visited = 0;
  bool out_of_budget = false;
  std::vector<int> hub, rim;  // rim[0] is placed last
  VertexSet used;

  bool place_hub(int i) {
    if (i == k) return close();
    for (int x : g.neighbors(hub[0]) - used) {
      if (x < hub[0]) continue;
      if (++visited > budget) return out_of_budget = true, false;
      bool ok = true;
      for (int j = 1; j < i && ok; ++j) ok = g.adjacent(x, hub[j]);
      for (int j = 1; j < i && ok; ++j) ok = !g.adjacent(x, rim[j]);
      if (!ok) continue;
      hub[i] = x;
      used.insert(x);
      if (place_rim(i)) return true;
      used.erase(x);
      if (out_of_budget) return false;
    }
    return false;
  }

  // rim[i] is adjacent to hub[i-1] and hub[i] only.
  bool place_rim(int i) {
    for (int y : (g.neighbors(hub[i - 1]) & g.neighbors(hub[i])) - used) {
      if (++visited > budget) return out_of_budget = true, false;
      bool ok = true;
      for (int j = 0; j < i - 1 && ok; ++j) ok = !g.adjacent(y, hub[j]);
      for (int j = 1; j < i && ok; ++j) ok = !g.adjacent(y, rim[j]);
      if (!ok) continue;
      rim[i] = y;
      used.insert(y);
      if (place_hub(i + 1)) return true;
      used.erase(y);
      if (out_of_budget) return false;
    }
    return false;
  }

  bool close() {
    for (int y : (g.neighbors(hub[k - 1]) & g.neighbors(hub[0])) - used) {
      if (++visited > budget) return out_of_budget = true, false;
      bool ok = true;
      for (int j = 1; j < k - 1 && ok; ++j) ok = !g.adjacent(y, hub[j]);
      for (int j = 1; j < k && ok; ++j) ok = !g.adjacent(y, rim[j]);
      if (!ok) continue;
      rim[0] = y;
      return true;
    }
    return false;
  }
};

}  // namespace

Bounded<SunWitness> find_sun(const Graph& g, int max_vertices, std::uint64_t budget) {
  Bounded<SunWitness> result;
  for (int k = 3; 2 * k <= std::min(max_vertices, g.order()); ++k) {
    SunSearch s{g, k, budget - std::min(budget, result.visited), 0, false, {}, {}, {}};
    s.hub.assign(k, -1);
    s.rim.assign(k, -1);
    for (int x0 = 0; x0 < g.order(); ++x0) {
      s.hub[0] = x0;
      s.used = VertexSet{x0};
      if (s.place_hub(1)) {
        result.visited += s.visited;
        result.status = SearchStatus::found;
        result.value = SunWitness{k, s.hub, s.rim};
        return result;
      }
      if (s.out_of_budget) break;
    }
    result.visited += s.visited;
    if (s.out_of_budget) {
      result.status = SearchStatus::budget_exceeded;
      return result;
    }
  }
  result.status = SearchStatus::none;
  return result;
}

bool verify_sun(const Graph& g, const SunWitness& w) {
  const int k = w.k;
  if (k < 3 || static_cast<int>(w.hub.size()) != k || static_cast<int>(w.rim.size()) != k) return false;
  VertexSet hub = VertexSet::from(w.hub), rim = VertexSet::from(w.rim);
  if (hub.size() != k || rim.size() != k || hub.intersects(rim)) return false;
  if (!is_clique(g, hub) || !is_independent(g, rim)) return false;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      bool want = j == i || j == (i + 1) % k;
      if (g.adjacent(w.hub[i], w.rim[j]) != want) return false;
    }
  return true;
}

std::optional<GemWitness> find_gem(const Graph& g) {
  for (int c = 0; c < g.order(); ++c) {
    auto s = g.neighbors(c);
    for (int b : s)
      for (int d : g.neighbors(b) & s) {  // middle edge b-d of the P4
        for (int a : (g.neighbors(b) & s) - g.neighbors(d)) {
          if (a == d) continue;
          for (int e : (g.neighbors(d) & s) - g.neighbors(b) - g.neighbors(a)) {
            if (e == a || e == b) continue;
            return GemWitness{c, {a, b, d, e}};
          }
        }
      }
  }
  return std::nullopt;
}

bool is_ptolemaic(const Graph& g) { return is_chordal(g) && !find_gem(g); }

}  // namespace cak
