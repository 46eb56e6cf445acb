#include <doctest.h>

#include "cak/errors.hpp"
#include "cak/graph.hpp"
#include "cak/patterns.hpp"
#include "oracles.hpp"

using namespace cak;

TEST_CASE("parse empty and complete graphs") {
  auto e = parse_graph("3 0\n");
  CHECK(e.order() == 3);
  CHECK(e.edge_count() == 0);
  auto k3 = parse_graph("3 3\n0 1\n1 2\n0 2\n");
  CHECK(k3 == oracle::complete(3));
}

TEST_CASE("parse errors carry the line") {
  auto line_of = [](const char* text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("2 1\n0 0\n") == 2);
  CHECK(line_of("# comment\n2 1\n0 5\n") == 3);
  CHECK(line_of("3 2\n0 1\n1 0\n") == 3);
  CHECK(line_of("x y\n") == 1);
  CHECK(line_of("3 2\n0 1\n") > 0);
}

TEST_CASE("comments and whitespace are accepted") {
  auto g = parse_graph("# header\n  3   2 \n# mid\n0\t1\n1 2\n");
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(1, 2));
}

TEST_CASE("serialize then parse is the identity on random graphs") {
  for (std::uint64_t i = 0; i < 50; ++i) {
    auto g = oracle::random_graph(1 + static_cast<int>(i % 12), 0.4, 3, i);
    auto text = serialize_graph(g);
    CHECK(parse_graph(text) == g);
    CHECK(serialize_graph(parse_graph(text)) == text);
  }
}

TEST_CASE("adjacency is symmetric and irreflexive on every construction path") {
  std::vector<Graph> graphs;
  for (int id = 1; id <= 7; ++id) graphs.push_back(pattern_graph(id));
  for (std::uint64_t i = 0; i < 20; ++i) {
    graphs.push_back(oracle::random_graph(10, 0.5, 9, i));
    GenConfig cfg;
    cfg.n = 10;
    cfg.index = i;
    graphs.push_back(random_chordal(cfg));
  }
  for (const auto& g : graphs)
    for (int u = 0; u < g.order(); ++u) {
      CHECK_FALSE(g.adjacent(u, u));
      for (int v : g.neighbors(u)) CHECK(g.adjacent(v, u));
    }
}

TEST_CASE("induced subgraphs") {
  auto k2 = induced_subgraph(oracle::complete(3), {0, 1});
  CHECK(k2.graph == oracle::complete(2));
  auto p4 = induced_subgraph(oracle::path(4), {0, 2});
  CHECK(p4.graph.edge_count() == 0);
  CHECK(p4.to_host == std::vector<int>{0, 2});
  CHECK(p4.lift({1}) == VertexSet{2});

  auto g7 = pattern_graph(7);
  VertexSet core;
  for (auto r : {Role::x0, Role::x1, Role::y00, Role::y01, Role::y10, Role::y11}) core.insert(pattern_index(7, r));
  auto h = induced_subgraph(g7, core);
  CHECK(h.graph.order() == 6);
  CHECK(h.graph.edge_count() == 15);

  auto full = induced_subgraph(g7, g7.vertices());
  CHECK(full.graph == g7);
  CHECK_THROWS_AS(induced_subgraph(g7, VertexSet{}), PreconditionError);
}

TEST_CASE("neighborhoods") {
  auto k3 = oracle::complete(3);
  CHECK(neighborhood(k3, 0, false) == VertexSet{1, 2});
  CHECK(neighborhood(k3, 0, true) == VertexSet{0, 1, 2});
  auto g1 = pattern_graph(1);
  VertexSet expect{pattern_index(1, Role::x0), pattern_index(1, Role::y00)};
  CHECK(neighborhood(g1, pattern_index(1, Role::z00), false) == expect);
}

TEST_CASE("components and permutation") {
  auto g = oracle::from_edges(5, {{0, 1}, {3, 4}});
  auto comps = connected_components(g);
  REQUIRE(comps.size() == 3);
  CHECK_FALSE(is_connected(g));
  CHECK(is_connected(oracle::path(5)));
  std::vector<int> perm{4, 3, 2, 1, 0};
  auto p = permute(g, perm);
  CHECK(p.adjacent(4, 3));
  CHECK(p.adjacent(1, 0));
  CHECK(p.edge_count() == 2);
}

TEST_CASE("vertex set algebra and canonical order") {
  VertexSet a{1, 3, 200}, b{3, 4};
  CHECK((a & b) == VertexSet{3});
  CHECK((a | b).size() == 4);
  CHECK((a - b) == VertexSet{1, 200});
  CHECK((a | a) == a);
  CHECK((a & a) == a);
  CHECK(VertexSet{3}.is_subset_of(a));
  CHECK(b < a);                            // smaller first
  CHECK(VertexSet{0, 5} < VertexSet{1, 2});  // then lexicographic
  CHECK(a.members() == std::vector<int>{1, 3, 200});
  CHECK(a.next(3) == 200);
}
