#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "cak/errors.hpp"
#include "cak/graph.hpp"

namespace cak {

enum class OrderKind { perfect, strong, none };

/// Vertex elimination order; order[0] is eliminated first.
struct EliminationOrder {
  std::vector<int> order;
  OrderKind kind = OrderKind::none;
};

/// Induced cycle of length >= 4, listed in cyclic order.
struct HoleWitness {
  std::vector<int> cycle;
};

/// k-sun: hub[i] adjacent to rim[j] exactly when j == i or j == i+1 (mod k).
struct SunWitness {
  int k = 0;
  std::vector<int> hub;
  std::vector<int> rim;
};

/// Lexicographic breadth-first search; returns the visit order.
std::vector<int> lex_bfs(const Graph& g);

/// True when every vertex's later neighbours in `order` form a clique.
bool is_perfect_elimination_order(const Graph& g, const std::vector<int>& order);

/// A verified perfect elimination order, or an induced hole.
std::variant<EliminationOrder, HoleWitness> chordality(const Graph& g);
bool is_chordal(const Graph& g);

/// Maximal cliques of a chordal graph from a perfect elimination order,
/// sorted by VertexSet canonical order. Throws PreconditionError when `peo`
/// is not perfect for `g`.
std::vector<VertexSet> maximal_cliques(const Graph& g, const EliminationOrder& peo);
/// Same, computing the order; throws PreconditionError for non-chordal input.
std::vector<VertexSet> maximal_cliques(const Graph& g);
/// Bron-Kerbosch with pivoting; works for any graph.
std::vector<VertexSet> all_maximal_cliques(const Graph& g);

/// Closed-neighbourhood matrix under a doubly lexical ordering.
struct DoublyLexicalOrdering {
  std::vector<int> rows;
  std::vector<int> columns;
};
DoublyLexicalOrdering doubly_lexical_ordering(const Graph& g);

/// Strong elimination order read off a Γ-free doubly lexical ordering, or
/// nullopt when the graph is not strongly chordal.
std::optional<EliminationOrder> strong_elimination_order(const Graph& g);
bool is_strongly_chordal(const Graph& g);

/// Exhaustive search for an induced k-sun with 2k <= max_vertices.
Bounded<SunWitness> find_sun(const Graph& g, int max_vertices, std::uint64_t budget = search_budget());
bool verify_sun(const Graph& g, const SunWitness& w);

/// An induced gem: path p[0]-p[1]-p[2]-p[3] plus `center` adjacent to all four.
struct GemWitness {
  int center = -1;
  std::vector<int> path;
};
std::optional<GemWitness> find_gem(const Graph& g);
bool is_ptolemaic(const Graph& g);

}  // namespace cak
