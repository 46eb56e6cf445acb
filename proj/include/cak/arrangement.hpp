#pragma once

#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cak/graph.hpp"

namespace cak {

/// Clique arrangement of a chordal graph: every nonempty intersection of
/// maximal cliques as a node, the inclusion cover relation as arcs.
///
/// Node ids follow VertexSet canonical order (cardinality, then lexicographic),
/// so ids are deterministic. Reachability is materialized at build time:
/// `reaches(x, y)` is a bit lookup and equals `node(x) ⊆ node(y)`.
class CliqueArrangement {
 public:
  int node_count() const { return static_cast<int>(nodes_.size()); }
  const VertexSet& node(int id) const { return nodes_[id]; }
  const std::vector<VertexSet>& nodes() const { return nodes_; }

  const std::vector<int>& successors(int id) const { return out_[id]; }
  const std::vector<int>& predecessors(int id) const { return in_[id]; }
  int arc_count() const;
  std::vector<std::pair<int, int>> arcs() const;

  bool reaches(int x, int y) const { return up_[x].contains(y); }
  /// Nodes reachable from `id` (including itself).
  const NodeSet& up_set(int id) const { return up_[id]; }
  /// Nodes that reach `id` (including itself).
  const NodeSet& down_set(int id) const { return down_[id]; }

  const std::vector<int>& sinks() const { return sinks_; }
  bool is_sink(int id) const { return out_[id].empty(); }
  /// Sinks reachable from `id`.
  std::vector<int> sinks_above(int id) const;

  /// Node id holding exactly `s`, if any.
  std::optional<int> find(const VertexSet& s) const;

  /// False when built from a non-chordal graph; theorem-level routines
  /// refuse such arrangements.
  bool chordal() const { return chordal_; }
  const Graph& graph() const { return graph_; }

  /// Nodes X with lower ⊆ X ⊆ upper.
  NodeSet interval(const VertexSet& lower, const VertexSet& upper) const;

  /// Shortest Hasse path from `from` to `to` through nodes in `allowed`
  /// (endpoints must be allowed); empty when none exists. Ties resolve
  /// toward smaller node ids.
  std::vector<int> hasse_path(int from, int to, const NodeSet& allowed) const;

 private:
  friend CliqueArrangement build_arrangement(const Graph& g, std::span<const VertexSet> cliques);

  Graph graph_;
  bool chordal_ = true;
  std::vector<VertexSet> nodes_;
  std::vector<std::vector<int>> out_, in_;
  std::vector<NodeSet> up_, down_;
  std::vector<int> sinks_;
  std::unordered_map<VertexSet, int> index_;
};

/// Closes `cliques` under nonempty pairwise intersection and takes the cover
/// relation. `cliques` must be the maximal cliques of `g`.
CliqueArrangement build_arrangement(const Graph& g, std::span<const VertexSet> cliques);
/// Computes the maximal cliques first (Bron-Kerbosch when `g` is not chordal).
CliqueArrangement build_arrangement(const Graph& g);

/// A vertex x ∈ c1 \ c2 with no neighbour in c2 \ c1. Throws
/// InvariantViolation("lemma-1") when none exists.
int witness_nonadjacent_vertex(const Graph& g, const VertexSet& c1, const VertexSet& c2);

/// Two sinks whose intersection equals the intersection of `node_ids`;
/// `second` is empty when that intersection is itself a sink.
struct SinkCover {
  int first = -1;
  std::optional<int> second;
};
SinkCover two_clique_cover(const CliqueArrangement& a, std::span<const int> node_ids);

/// For distinct nodes with X = Y ∩ Z: sinks c1 above Y and c2 above Z with
/// X = c1 ∩ c2.
std::pair<int, int> sink_pair_for_intersection(const CliqueArrangement& a, int x, int y, int z);

/// Node map from the arrangement of G[sub] into the arrangement of G.
struct EmbeddingMap {
  CliqueArrangement host;
  CliqueArrangement sub;
  /// Subgraph vertex -> host vertex.
  std::vector<int> to_host;
  /// Sub node id -> host node id.
  std::vector<int> phi;
};

/// Sinks map to the first containing host clique; other nodes map to the
/// intersection of the images of their reachable sinks. Verified before
/// returning (throws InvariantViolation("lemma-7") on failure).
EmbeddingMap embed_arrangement(const Graph& g, const VertexSet& sub);
/// Injectivity and two-way path preservation.
bool verify_embedding(const EmbeddingMap& m);

/// Every node equals the intersection of its out-neighbours and of its
/// reachable sinks.
bool check_sink_intersections(const CliqueArrangement& a);
/// Intersecting any two nodes yields nothing new.
bool check_closure_fixpoint(const CliqueArrangement& a);
/// No arc is implied by a longer path.
bool check_no_transitive_arcs(const CliqueArrangement& a);
/// Directed reachability along arcs coincides with set inclusion.
bool check_hasse_reachability(const CliqueArrangement& a);

}  // namespace cak
