#include <doctest.h>

#include "cak/campaign.hpp"
#include "cak/chordal.hpp"
#include "cak/patterns.hpp"
#include "oracles.hpp"

using namespace cak;

namespace {

bool is_hole(const Graph& g, const std::vector<int>& c) {
  const int k = static_cast<int>(c.size());
  if (k < 4 || VertexSet::from(c).size() != k) return false;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (g.adjacent(c[i], c[j]) != consecutive) return false;
    }
  return true;
}

std::vector<Graph> small_graphs() {
  std::vector<Graph> out;
  for (int n = 1; n <= 7; ++n)
    for (auto& g : connected_graphs(n)) out.push_back(g);
  return out;
}

}  // namespace

TEST_CASE("holes and elimination orders") {
  auto c4 = chordality(oracle::cycle(4));
  REQUIRE(std::holds_alternative<HoleWitness>(c4));
  CHECK(is_hole(oracle::cycle(4), std::get<HoleWitness>(c4).cycle));
  auto tree = oracle::from_edges(6, {{0, 1}, {0, 2}, {2, 3}, {2, 4}, {4, 5}});
  auto t = chordality(tree);
  REQUIRE(std::holds_alternative<EliminationOrder>(t));
  CHECK(is_perfect_elimination_order(tree, std::get<EliminationOrder>(t).order));
  auto g1 = pattern_graph(1);
  auto o = chordality(g1);
  REQUIRE(std::holds_alternative<EliminationOrder>(o));
  CHECK(is_perfect_elimination_order(g1, std::get<EliminationOrder>(o).order));
}

TEST_CASE("chordality agrees with the brute-force hole search") {
  for (const auto& g : small_graphs()) {
    auto r = chordality(g);
    CHECK(std::holds_alternative<EliminationOrder>(r) == !oracle::has_hole(g));
    if (auto* h = std::get_if<HoleWitness>(&r)) CHECK(is_hole(g, h->cycle));
    if (auto* e = std::get_if<EliminationOrder>(&r)) CHECK(is_perfect_elimination_order(g, e->order));
  }
  for (std::uint64_t i = 0; i < 150; ++i) {
    auto g = oracle::random_graph(9, 0.45, 21, i);
    CHECK(is_chordal(g) == !oracle::has_hole(g));
  }
}

TEST_CASE("maximal cliques agree with brute force") {
  CHECK(maximal_cliques(oracle::complete(3)) == std::vector<VertexSet>{{0, 1, 2}});
  CHECK(maximal_cliques(oracle::path(3)) == std::vector<VertexSet>{{0, 1}, {1, 2}});
  for (std::uint64_t i = 0; i < 100; ++i) {
    GenConfig cfg;
    cfg.n = 3 + static_cast<int>(i % 10);
    cfg.index = i;
    cfg.density = 0.05 + 0.005 * static_cast<double>(i);
    auto g = random_chordal(cfg);
    auto cliques = maximal_cliques(g);
    CHECK(cliques == oracle::maximal_cliques(g));
    CHECK(static_cast<int>(cliques.size()) <= g.order());
    CHECK(all_maximal_cliques(g) == cliques);
  }
  for (std::uint64_t i = 0; i < 60; ++i) {
    auto g = oracle::random_graph(10, 0.5, 4, i);
    CHECK(all_maximal_cliques(g) == oracle::maximal_cliques(g));
  }
  CHECK_THROWS_AS(maximal_cliques(oracle::cycle(5)), PreconditionError);
}

TEST_CASE("G1 cliques") {
  auto g = pattern_graph(1);
  auto idx = [&](Role r) { return pattern_index(1, r); };
  std::vector<VertexSet> expect{
      {idx(Role::x0), idx(Role::x1), idx(Role::y00), idx(Role::y10)},
      {idx(Role::x0), idx(Role::x1), idx(Role::y01), idx(Role::y11)},
      {idx(Role::x0), idx(Role::y00), idx(Role::z00)},
      {idx(Role::x0), idx(Role::y01), idx(Role::z01)},
      {idx(Role::x1), idx(Role::y10), idx(Role::z10)},
      {idx(Role::x1), idx(Role::y11), idx(Role::z11)},
  };
  std::sort(expect.begin(), expect.end());
  CHECK(maximal_cliques(g) == expect);
}

TEST_CASE("strong chordality agrees with the sun oracle") {
  CHECK_FALSE(is_strongly_chordal(oracle::sun(3)));
  CHECK_FALSE(is_strongly_chordal(oracle::sun(4)));
  CHECK(is_strongly_chordal(pattern_graph(7)));
  for (int n = 1; n <= 8; ++n) CHECK(is_strongly_chordal(oracle::complete(n)));
  CHECK_FALSE(is_strongly_chordal(oracle::cycle(4)));

  for (const auto& g : small_graphs())
    CHECK(is_strongly_chordal(g) == (!oracle::has_hole(g) && !oracle::has_sun(g, g.order())));
  for (std::uint64_t i = 0; i < 300; ++i) {
    GenConfig cfg;
    cfg.n = 6 + static_cast<int>(i % 9);
    cfg.index = i;
    cfg.seed = 77;
    cfg.density = 0.1 + 0.001 * static_cast<double>(i);
    auto g = random_chordal(cfg);
    bool strong = is_strongly_chordal(g);
    CHECK(strong == !oracle::has_sun(g, g.order()));
    auto s = find_sun(g, g.order());
    REQUIRE(s.status != SearchStatus::budget_exceeded);
    CHECK(s.found() == !strong);
    if (s.found()) CHECK(verify_sun(g, *s.value));
    auto o = strong_elimination_order(g);
    CHECK(o.has_value() == strong);
    if (o) CHECK(is_perfect_elimination_order(g, o->order));
  }
}

TEST_CASE("sun search respects its size bound") {
  auto s3 = find_sun(oracle::sun(3), 6);
  REQUIRE(s3.found());
  CHECK(s3.value->k == 3);
  CHECK(verify_sun(oracle::sun(3), *s3.value));
  CHECK(find_sun(oracle::sun(4), 6).status == SearchStatus::none);
  auto s4 = find_sun(oracle::sun(4), 8);
  REQUIRE(s4.found());
  CHECK(s4.value->k == 4);
  CHECK(find_sun(pattern_graph(1), 10).status == SearchStatus::none);
  CHECK(find_sun(pattern_graph(1), 10, 3).status == SearchStatus::budget_exceeded);
}

TEST_CASE("ptolemaic graphs are the gem-free chordal graphs") {
  CHECK_FALSE(is_ptolemaic(oracle::gem()));
  CHECK(is_ptolemaic(oracle::path(6)));
  CHECK_FALSE(is_ptolemaic(pattern_graph(1)));
  for (const auto& g : small_graphs()) {
    CHECK(is_ptolemaic(g) == (!oracle::has_hole(g) && !oracle::has_gem(g)));
    if (is_ptolemaic(g)) CHECK(is_strongly_chordal(g));
  }
}

TEST_CASE("fixtures are strongly chordal by both methods and not ptolemaic") {
  for (int id = 1; id <= 7; ++id) {
    auto g = pattern_graph(id);
    CHECK(is_chordal(g));
    CHECK(is_strongly_chordal(g));
    CHECK(find_sun(g, g.order()).status == SearchStatus::none);
    CHECK_FALSE(is_ptolemaic(g));
  }
}

TEST_CASE("strong elimination orders on every connected graph up to seven vertices") {
  auto strong_order = [](const Graph& g, const std::vector<int>& order) {
    const int n = g.order();
    auto closed = [&](int a, int b) { return a == b || g.adjacent(a, b); };
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = k + 1; l < n; ++l)
            if (closed(order[i], order[k]) && closed(order[i], order[l]) && closed(order[j], order[k]) &&
                !closed(order[j], order[l]))
              return false;
    return true;
  };
  for (int n = 1; n <= 7; ++n)
    for (const auto& g : connected_graphs(n)) {
      auto o = strong_elimination_order(g);
      REQUIRE(o.has_value() == is_strongly_chordal(g));
      if (o) CHECK(strong_order(g, o->order));
    }
}
