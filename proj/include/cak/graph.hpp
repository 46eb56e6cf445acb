#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cak/vertex_set.hpp"

namespace cak {

struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
/// Immutable once constructed; the constructor rejects self-loops, duplicate
/// edges and out-of-range endpoints.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n, std::span<const Edge> edges = {}, std::vector<std::string> labels = {});

  int order() const { return n_; }
  int edge_count() const { return m_; }
  VertexSet vertices() const { return VertexSet::range(n_); }

  const VertexSet& neighbors(int v) const { return adjacency_[v]; }
  bool adjacent(int u, int v) const { return adjacency_[u].contains(v); }
  int degree(int v) const { return adjacency_[v].size(); }

  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  /// Vertex name; the decimal index when no labels were supplied.
  std::string label(int v) const;
  const std::vector<std::string>& labels() const { return labels_; }
  /// Index of the vertex with the given label, or -1.
  int find_label(std::string_view name) const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && adjacency_ == o.adjacency_; }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adjacency_;
  std::vector<std::string> labels_;
};

/// Parses the edge-list format: first non-comment line "n m", then m lines
/// "u v". Lines starting with '#' are ignored. Throws ParseError.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);

/// Canonical text form: header, then edges with u < v in lexicographic order.
std::string serialize_graph(const Graph& g);
void write_graph_file(const Graph& g, const std::string& path);

/// N(v), or N[v] when `closed`.
VertexSet neighborhood(const Graph& g, int v, bool closed);

struct InducedSubgraph {
  Graph graph;
  /// to_host[i] is the host vertex behind subgraph vertex i (ascending).
  std::vector<int> to_host;

  VertexSet lift(const VertexSet& s) const;
};

/// G[s], labels carried over. Throws PreconditionError for an empty set.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_independent(const Graph& g, const VertexSet& s);
bool is_connected(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);

/// Relabels: vertex v of g becomes perm[v].
Graph permute(const Graph& g, std::span<const int> perm);

std::string format_set(const Graph& g, const VertexSet& s);

}  // namespace cak
