#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cak/errors.hpp"
#include "cak/graph.hpp"

namespace cak {

struct TreeEdge {
  int p = 0;
  int q = 0;
  int weight = 1;
};

/// Weighted tree on nodes 0..nodes-1 whose leaves are in bijection with the
/// graph vertices; leaf_of[v] is the tree node carrying vertex v.
struct LeafRootModel {
  int nodes = 0;
  int k = 2;
  std::vector<TreeEdge> edges;
  std::vector<int> leaf_of;
};

/// Throws PreconditionError unless `m` is a tree with positive weights whose
/// leaves are exactly the images of leaf_of (for `vertex_count` vertices).
void validate_model(const LeafRootModel& m, int vertex_count);

/// Weighted distances between the tree nodes carrying each pair of vertices.
std::vector<std::vector<long long>> leaf_distances(const LeafRootModel& m);

struct LeafRootViolation {
  int u = -1;
  int v = -1;
  long long distance = 0;
  /// True when uv is an edge (distance must be <= k), false otherwise.
  bool edge = false;
};

/// First pair (u < v, lexicographic) where adjacency and distance <= k
/// disagree; nullopt when `m` is a k-leaf root of `g`.
std::optional<LeafRootViolation> verify_leaf_root(const Graph& g, const LeafRootModel& m);

/// The graph whose edges are the vertex pairs at distance <= k.
Graph leaf_power_graph(const LeafRootModel& m);

/// Subdivides every weight-w edge into w unit edges; leaf distances unchanged.
LeafRootModel expand_model(const LeafRootModel& m);

/// Multiplies every weight and k by `factor`; the leaf power is unchanged.
LeafRootModel scale_model(const LeafRootModel& m, int factor);

struct LeafRootBounds {
  int max_internal = -1;  // default n - 2
  int max_weight = -1;    // default max_k
  int max_k = -1;         // default 2n
};

enum class LeafRootStatus { found, exhausted, not_strongly_chordal, budget_exceeded };

struct LeafRootSearch {
  LeafRootStatus status = LeafRootStatus::exhausted;
  std::optional<LeafRootModel> model;
  std::uint64_t visited = 0;
  LeafRootBounds bounds;
};

/// Bounded search over tree topologies (internal nodes of degree >= 3 added
/// by stepwise leaf insertion), then integer weights, for k = 2..max_k.
/// Components are searched separately and joined through a hub node.
/// `exhausted` only means nothing exists inside the bounds.
LeafRootSearch search_leaf_root(const Graph& g, LeafRootBounds bounds = {},
                                std::uint64_t budget = search_budget(50'000'000));

/// Text form: "t k", then t-1 lines "p q w", then lines "treenode vertex".
LeafRootModel parse_model(std::string_view text);
LeafRootModel read_model_file(const std::string& path);
std::string serialize_model(const LeafRootModel& m);

std::string model_to_dot(const LeafRootModel& m, const Graph* g = nullptr);

}  // namespace cak
