#include <doctest.h>

#include "cak/arrangement.hpp"
#include "cak/chordal.hpp"
#include "cak/patterns.hpp"
#include "oracles.hpp"

#include <numeric>

using namespace cak;

namespace {

VertexSet roles(int id, std::initializer_list<Role> rs) {
  VertexSet s;
  for (auto r : rs) s.insert(pattern_index(id, r));
  return s;
}

int node_of(const CliqueArrangement& a, const VertexSet& s) {
  auto id = a.find(s);
  REQUIRE(id.has_value());
  return *id;
}

void check_against_oracle(const Graph& g) {
  auto a = build_arrangement(g);
  auto o = oracle::arrangement(g);
  REQUIRE(a.nodes() == o.nodes);
  auto arcs = a.arcs();
  CHECK(std::set<std::pair<int, int>>(arcs.begin(), arcs.end()) == o.arcs);
  auto sinks = o.sinks;
  std::sort(sinks.begin(), sinks.end());
  CHECK(a.sinks() == sinks);
  for (int x = 0; x < a.node_count(); ++x)
    for (int y = 0; y < a.node_count(); ++y) CHECK(a.reaches(x, y) == a.node(x).is_subset_of(a.node(y)));
}

}  // namespace

TEST_CASE("small arrangements") {
  auto k3 = build_arrangement(oracle::complete(3));
  CHECK(k3.node_count() == 1);
  CHECK(k3.arc_count() == 0);
  auto p3 = build_arrangement(oracle::path(3));
  REQUIRE(p3.node_count() == 3);
  CHECK(p3.node(0) == VertexSet{1});
  CHECK(p3.arcs() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
  CHECK(p3.reaches(1, 1));
}

TEST_CASE("G1 and G7 arrangements") {
  auto a1 = build_arrangement(pattern_graph(1));
  CHECK(a1.node_count() == 13);
  CHECK(a1.arc_count() == 16);
  CHECK(a1.sinks().size() == 6);
  CHECK(a1.find(roles(1, {Role::x0, Role::x1})).has_value());
  auto x0 = node_of(a1, roles(1, {Role::x0}));
  auto t0 = node_of(a1, roles(1, {Role::x0, Role::x1, Role::y00, Role::y10}));
  auto t1 = node_of(a1, roles(1, {Role::x0, Role::x1, Role::y01, Role::y11}));
  auto x0y00 = node_of(a1, roles(1, {Role::x0, Role::y00}));
  CHECK(a1.reaches(x0, t0));
  CHECK_FALSE(a1.reaches(x0y00, t1));

  auto a7 = build_arrangement(pattern_graph(7));
  CHECK(a7.node_count() == 16);
  CHECK(a7.sinks().size() == 7);
  auto six = node_of(a7, roles(7, {Role::x0, Role::x1, Role::y00, Role::y01, Role::y10, Role::y11}));
  CHECK(a7.is_sink(six));
  CHECK(a7.find(roles(7, {Role::x0, Role::x1, Role::z0, Role::y00, Role::y10})).has_value());
  CHECK(a7.find(roles(7, {Role::x0, Role::x1, Role::z1, Role::y01, Role::y11})).has_value());
}

TEST_CASE("G2 and G6 arrangements") {
  auto a2 = build_arrangement(pattern_graph(2));
  CHECK(a2.node_count() == 16);
  CHECK(a2.arc_count() == 20);
  CHECK(a2.sinks().size() == 7);
  CHECK(a2.find(roles(2, {Role::x0, Role::x1, Role::y00})).has_value());
  CHECK(a2.is_sink(node_of(a2, roles(2, {Role::x0, Role::x1, Role::y00, Role::y01}))));
  auto a6 = build_arrangement(pattern_graph(6));
  CHECK(a6.node_count() == 20);
  CHECK(a6.arc_count() == 26);
  CHECK(a6.sinks().size() == 8);
  CHECK(a6.is_sink(node_of(a6, roles(6, {Role::x0, Role::x1, Role::y10, Role::y00, Role::y01}))));
}

TEST_CASE("arrangements agree with the definition") {
  for (int id = 1; id <= 7; ++id) check_against_oracle(pattern_graph(id));
  for (std::uint64_t i = 0; i < 120; ++i) {
    GenConfig cfg;
    cfg.n = 2 + static_cast<int>(i % 11);
    cfg.index = i;
    cfg.seed = 5;
    cfg.density = 0.05 + 0.004 * static_cast<double>(i);
    check_against_oracle(random_chordal(cfg));
  }
}

TEST_CASE("structural checks hold on random chordal graphs") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    GenConfig cfg;
    cfg.n = 2 + static_cast<int>(i % 13);
    cfg.index = i;
    cfg.seed = 6;
    cfg.density = 0.03 + 0.003 * static_cast<double>(i);
    auto g = random_chordal(cfg);
    auto a = build_arrangement(g);
    CHECK(a.chordal());
    CHECK(check_sink_intersections(a));
    CHECK(check_closure_fixpoint(a));
    CHECK(check_no_transitive_arcs(a));
    CHECK(check_hasse_reachability(a));
    if (is_strongly_chordal(g)) {
      const long c = static_cast<long>(a.sinks().size());
      CHECK(a.node_count() <= 1 + c * (c + 1) / 2);
    }
    if (is_ptolemaic(g)) {
      // Undirected Hasse diagram is a forest: arcs = nodes - components.
      std::vector<int> parent(a.node_count());
      std::iota(parent.begin(), parent.end(), 0);
      std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
      bool forest = true;
      for (auto [x, y] : a.arcs()) {
        int rx = find(x), ry = find(y);
        if (rx == ry) forest = false;
        parent[rx] = ry;
      }
      CHECK(forest);
    }
  }
}

TEST_CASE("non-chordal input is tagged") {
  auto a = build_arrangement(oracle::cycle(4));
  CHECK_FALSE(a.chordal());
  CHECK(a.sinks().size() == 4);
}

TEST_CASE("build_arrangement validates cliques") {
  auto g = oracle::path(3);
  CHECK_NOTHROW(build_arrangement(g, std::vector<VertexSet>{{0, 1}, {1, 2}}));
  std::vector<VertexSet> not_maximal{{0}, {1, 2}};
  CHECK_THROWS_AS(build_arrangement(g, not_maximal), PreconditionError);
}

TEST_CASE("nonadjacent witness") {
  auto g = pattern_graph(1);
  auto c1 = roles(1, {Role::x0, Role::y00, Role::z00});
  auto c2 = roles(1, {Role::x0, Role::x1, Role::y01, Role::y11});
  CHECK(witness_nonadjacent_vertex(g, c1, c2) == pattern_index(1, Role::z00));
  CHECK(witness_nonadjacent_vertex(oracle::path(3), {0, 1}, {1, 2}) == 0);
  auto two = oracle::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
  CHECK(VertexSet({0, 1, 2}).contains(witness_nonadjacent_vertex(two, {0, 1, 2}, {3, 4, 5})));
  for (const auto& g2 : {pattern_graph(3), pattern_graph(6)}) {
    auto cliques = maximal_cliques(g2);
    for (const auto& a : cliques)
      for (const auto& b : cliques) {
        if (a == b) continue;
        int x = witness_nonadjacent_vertex(g2, a, b);
        CHECK((a - b).contains(x));
        CHECK_FALSE(g2.neighbors(x).intersects(b - a));
      }
  }
}

TEST_CASE("two clique cover") {
  auto g = pattern_graph(1);
  auto a = build_arrangement(g);
  int t0 = node_of(a, roles(1, {Role::x0, Role::x1, Role::y00, Role::y10}));
  int t1 = node_of(a, roles(1, {Role::x0, Role::x1, Role::y01, Role::y11}));
  int q00 = node_of(a, roles(1, {Role::x0, Role::y00, Role::z00}));
  int q01 = node_of(a, roles(1, {Role::x0, Role::y01, Role::z01}));

  int pair[] = {t0, t1};
  auto c = two_clique_cover(a, pair);
  REQUIRE(c.second.has_value());
  CHECK((a.node(c.first) & a.node(*c.second)) == roles(1, {Role::x0, Role::x1}));

  int four[] = {t0, t1, q00, q01};
  auto c4 = two_clique_cover(a, four);
  REQUIRE(c4.second.has_value());
  CHECK((a.node(c4.first) & a.node(*c4.second)) == roles(1, {Role::x0}));

  int single[] = {t0};
  auto c1 = two_clique_cover(a, single);
  CHECK(c1.first == t0);
  CHECK_FALSE(c1.second.has_value());

  int q10 = node_of(a, roles(1, {Role::x1, Role::y10, Role::z10}));
  int disjoint[] = {q00, q10};
  CHECK_THROWS_AS(two_clique_cover(a, disjoint), PreconditionError);
}

TEST_CASE("sink pair for an intersection") {
  auto a = build_arrangement(pattern_graph(1));
  int t0 = node_of(a, roles(1, {Role::x0, Role::x1, Role::y00, Role::y10}));
  int t1 = node_of(a, roles(1, {Role::x0, Role::x1, Role::y01, Role::y11}));
  int x = node_of(a, roles(1, {Role::x0, Role::x1}));
  CHECK(sink_pair_for_intersection(a, x, t0, t1) == std::pair{t0, t1});

  int x0 = node_of(a, roles(1, {Role::x0}));
  int y = node_of(a, roles(1, {Role::x0, Role::y00}));
  int z = node_of(a, roles(1, {Role::x0, Role::y01}));
  auto [c1, c2] = sink_pair_for_intersection(a, x0, y, z);
  CHECK(a.reaches(y, c1));
  CHECK(a.reaches(z, c2));
  CHECK((a.node(c1) & a.node(c2)) == a.node(x0));

  auto p4 = build_arrangement(oracle::path(4));
  int b = node_of(p4, {1});
  int ab = node_of(p4, {0, 1});
  int bc = node_of(p4, {1, 2});
  CHECK(sink_pair_for_intersection(p4, b, ab, bc) == std::pair{ab, bc});
  CHECK_THROWS_AS(sink_pair_for_intersection(p4, ab, ab, bc), PreconditionError);
}

TEST_CASE("embeddings") {
  auto p4 = oracle::path(4);
  auto m = embed_arrangement(p4, {0, 1, 2});
  CHECK(verify_embedding(m));
  for (int id = 0; id < m.sub.node_count(); ++id)
    CHECK(m.host.node(m.phi[id]) == m.sub.node(id));

  auto k3 = embed_arrangement(oracle::complete(3), {0, 1});
  REQUIRE(k3.phi.size() == 1);
  CHECK(k3.host.node(k3.phi[0]) == VertexSet{0, 1, 2});

  auto g1 = pattern_graph(1);
  auto id = embed_arrangement(g1, g1.vertices());
  for (int i = 0; i < id.sub.node_count(); ++i) CHECK(id.phi[i] == i);

  for (std::uint64_t i = 0; i < 100; ++i) {
    GenConfig cfg;
    cfg.n = 4 + static_cast<int>(i % 9);
    cfg.index = i;
    cfg.seed = 8;
    cfg.density = 0.05 + 0.004 * static_cast<double>(i);
    auto g = random_chordal(cfg);
    Rng rng(8, i);
    VertexSet sub;
    for (int v = 0; v < g.order(); ++v)
      if (rng.bernoulli(0.6)) sub.insert(v);
    if (sub.empty()) sub.insert(0);
    auto e = embed_arrangement(g, sub);
    CHECK(verify_embedding(e));
    // Each sub node lies inside its image; the image meets the subgraph in exactly that node.
    for (int x = 0; x < e.sub.node_count(); ++x) {
      auto lifted = VertexSet::from([&] {
        std::vector<int> v;
        for (int s : e.sub.node(x)) v.push_back(e.to_host[s]);
        return v;
      }());
      CHECK((e.host.node(e.phi[x]) & sub) == lifted);
    }
  }
}
