#include "cak/arrangement.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "cak/chordal.hpp"
#include "cak/errors.hpp"

namespace cak {

int CliqueArrangement::arc_count() const {
  int c = 0;
  for (const auto& o : out_) c += static_cast<int>(o.size());
  return c;
}

std::vector<std::pair<int, int>> CliqueArrangement::arcs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < node_count(); ++x)
    for (int y : out_[x]) out.emplace_back(x, y);
  return out;
}

std::vector<int> CliqueArrangement::sinks_above(int id) const {
  std::vector<int> out;
  for (int s : sinks_)
    if (reaches(id, s)) out.push_back(s);
  return out;
}

std::optional<int> CliqueArrangement::find(const VertexSet& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeSet CliqueArrangement::interval(const VertexSet& lower, const VertexSet& upper) const {
  NodeSet out(node_count());
  for (int x = 0; x < node_count(); ++x)
    if (lower.is_subset_of(nodes_[x]) && nodes_[x].is_subset_of(upper)) out.insert(x);
  return out;
}

std::vector<int> CliqueArrangement::hasse_path(int from, int to, const NodeSet& allowed) const {
  if (!allowed.contains(from) || !allowed.contains(to)) return {};
  std::vector<int> parent(node_count(), -1);
  std::deque<int> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    if (x == to) break;
    for (int y : out_[x]) {
      if (parent[y] >= 0 || !allowed.contains(y) || !up_[y].contains(to)) continue;
      parent[y] = x;
      queue.push_back(y);
    }
  }
  if (parent[to] < 0) return {};
  std::vector<int> path;
  for (int x = to; x != from; x = parent[x]) path.push_back(x);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

CliqueArrangement build_arrangement(const Graph& g, std::span<const VertexSet> cliques) {
  for (const auto& c : cliques) {
    if (c.empty() || !is_clique(g, c)) throw PreconditionError("build_arrangement: input set is not a clique");
    for (int v = 0; v < g.order(); ++v)
      if (!c.contains(v) && c.is_subset_of(g.neighbors(v)))
        throw PreconditionError("build_arrangement: clique " + format_set(g, c) + " is not maximal");
  }

  CliqueArrangement a;
  a.graph_ = g;
  a.chordal_ = is_chordal(g);

  // Fixpoint closure under pairwise intersection.
  std::unordered_set<VertexSet> seen;
  std::vector<VertexSet> all;
  for (const auto& c : cliques)
    if (seen.insert(c).second) all.push_back(c);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      auto x = all[i] & all[j];
      if (!x.empty() && seen.insert(x).second) all.push_back(x);
    }
  }
  std::sort(all.begin(), all.end());
  a.nodes_ = std::move(all);

  const int n = a.node_count();
  a.up_.assign(n, NodeSet(n));
  a.down_.assign(n, NodeSet(n));
  for (int x = 0; x < n; ++x) {
    a.index_.emplace(a.nodes_[x], x);
    for (int y = 0; y < n; ++y)
      if (a.nodes_[x].is_subset_of(a.nodes_[y])) {
        a.up_[x].insert(y);
        a.down_[y].insert(x);
      }
  }
  a.out_.assign(n, {});
  a.in_.assign(n, {});
  for (int x = 0; x < n; ++x) {
    a.up_[x].for_each([&](int y) {
      if (y == x) return;
      if ((a.up_[x] & a.down_[y]).count() == 2) {
        a.out_[x].push_back(y);
        a.in_[y].push_back(x);
      }
    });
  }
  for (int x = 0; x < n; ++x)
    if (a.out_[x].empty()) a.sinks_.push_back(x);
  return a;
}

CliqueArrangement build_arrangement(const Graph& g) {
  auto cliques = is_chordal(g) ? maximal_cliques(g) : all_maximal_cliques(g);
  return build_arrangement(g, cliques);
}

int witness_nonadjacent_vertex(const Graph& g, const VertexSet& c1, const VertexSet& c2) {
  auto other = c2 - c1;
  for (int x : c1 - c2)
    if (!g.neighbors(x).intersects(other)) return x;
  throw InvariantViolation("lemma-1", "no vertex of " + format_set(g, c1 - c2) + " avoids " + format_set(g, other));
}

SinkCover two_clique_cover(const CliqueArrangement& a, std::span<const int> node_ids) {
  if (node_ids.empty()) throw PreconditionError("two_clique_cover: empty collection");
  VertexSet meet = a.node(node_ids.front());
  for (int id : node_ids) meet &= a.node(id);
  if (meet.empty()) throw PreconditionError("two_clique_cover: collection has empty intersection");
  if (auto id = a.find(meet); id && a.is_sink(*id)) return {*id, std::nullopt};

  auto search = [&](const std::vector<int>& pool) -> std::optional<SinkCover> {
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = i + 1; j < pool.size(); ++j)
        if ((a.node(pool[i]) & a.node(pool[j])) == meet) return SinkCover{pool[i], pool[j]};
    return std::nullopt;
  };
  std::vector<int> given;
  for (int id : node_ids)
    if (a.is_sink(id) && std::find(given.begin(), given.end(), id) == given.end()) given.push_back(id);
  std::sort(given.begin(), given.end());
  if (auto c = search(given)) return *c;
  std::vector<int> above;
  for (int s : a.sinks())
    if (meet.is_subset_of(a.node(s))) above.push_back(s);
  if (auto c = search(above)) return *c;
  throw InvariantViolation("lemma-2", "no two sinks intersect in " + format_set(a.graph(), meet));
}

std::pair<int, int> sink_pair_for_intersection(const CliqueArrangement& a, int x, int y, int z) {
  if (x == y || y == z || x == z) throw PreconditionError("sink_pair_for_intersection: nodes must be distinct");
  if ((a.node(y) & a.node(z)) != a.node(x))
    throw PreconditionError("sink_pair_for_intersection: X is not Y ∩ Z");
  auto above_y = a.sinks_above(y);
  auto above_z = a.sinks_above(z);
  for (int c1 : above_y)
    for (int c2 : above_z)
      if ((a.node(c1) & a.node(c2)) == a.node(x)) return {c1, c2};
  throw InvariantViolation("lemma-6", "no sink pair realizes " + format_set(a.graph(), a.node(x)));
}

EmbeddingMap embed_arrangement(const Graph& g, const VertexSet& sub) {
  auto h = induced_subgraph(g, sub);
  EmbeddingMap m{build_arrangement(g), build_arrangement(h.graph), h.to_host, {}};
  const auto& host = m.host;
  const auto& small = m.sub;
  std::vector<VertexSet> image(small.node_count());
  m.phi.assign(small.node_count(), -1);
  for (int c : small.sinks()) {
    auto lifted = h.lift(small.node(c));
    for (int s : host.sinks())
      if (lifted.is_subset_of(host.node(s))) {
        m.phi[c] = s;
        break;
      }
    if (m.phi[c] < 0) throw InvariantViolation("lemma-7", "no host clique contains a subgraph clique");
  }
  for (int x = 0; x < small.node_count(); ++x) {
    if (small.is_sink(x)) continue;
    VertexSet meet = VertexSet::range(g.order());
    for (int c : small.sinks_above(x)) meet &= host.node(m.phi[c]);
    auto id = host.find(meet);
    if (!id) throw InvariantViolation("lemma-7", "image intersection is not a host node");
    m.phi[x] = *id;
  }
  if (!verify_embedding(m)) throw InvariantViolation("lemma-7", "embedding failed verification");
  return m;
}

bool verify_embedding(const EmbeddingMap& m) {
  const int n = m.sub.node_count();
  if (static_cast<int>(m.phi.size()) != n) return false;
  VertexSet sub_vertices = VertexSet::from(m.to_host);
  for (int x = 0; x < n; ++x) {
    if (m.phi[x] < 0 || m.phi[x] >= m.host.node_count()) return false;
    // X = φ(X) ∩ V, read in host vertex ids.
    VertexSet lifted;
    for (int v : m.sub.node(x)) lifted.insert(m.to_host[v]);
    if ((m.host.node(m.phi[x]) & sub_vertices) != lifted) return false;
    for (int y = 0; y < n; ++y) {
      if ((x == y) != (m.phi[x] == m.phi[y])) return false;
      if (m.sub.reaches(x, y) != m.host.reaches(m.phi[x], m.phi[y])) return false;
    }
  }
  return true;
}

bool check_sink_intersections(const CliqueArrangement& a) {
  for (int x = 0; x < a.node_count(); ++x) {
    if (a.is_sink(x)) continue;
    VertexSet by_arcs = VertexSet::range(VertexSet::kCapacity);
    for (int y : a.successors(x)) by_arcs &= a.node(y);
    VertexSet by_sinks = VertexSet::range(VertexSet::kCapacity);
    for (int s : a.sinks_above(x)) by_sinks &= a.node(s);
    if (by_arcs != a.node(x) || by_sinks != a.node(x)) return false;
  }
  return true;
}

bool check_closure_fixpoint(const CliqueArrangement& a) {
  for (int x = 0; x < a.node_count(); ++x)
    for (int y = 0; y < x; ++y) {
      auto meet = a.node(x) & a.node(y);
      if (!meet.empty() && !a.find(meet)) return false;
    }
  return true;
}

namespace {

NodeSet arc_reachable(const CliqueArrangement& a, int from, std::pair<int, int> skip = {-1, -1}) {
  NodeSet seen(a.node_count());
  std::vector<int> stack{from};
  seen.insert(from);
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : a.successors(x)) {
      if (std::pair{x, y} == skip || seen.contains(y)) continue;
      seen.insert(y);
      stack.push_back(y);
    }
  }
  return seen;
}

}  // namespace

bool check_no_transitive_arcs(const CliqueArrangement& a) {
  for (auto [x, y] : a.arcs())
    if (arc_reachable(a, x, {x, y}).contains(y)) return false;
  return true;
}

bool check_hasse_reachability(const CliqueArrangement& a) {
  for (int x = 0; x < a.node_count(); ++x) {
    auto r = arc_reachable(a, x);
    for (int y = 0; y < a.node_count(); ++y)
      if (r.contains(y) != a.node(x).is_subset_of(a.node(y))) return false;
  }
  return true;
}

}  // namespace cak
