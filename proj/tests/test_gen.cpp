#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "cak/arrangement.hpp"
#include "cak/chordal.hpp"
#include "cak/cycles.hpp"
#include "cak/gen.hpp"
#include "cak/json_io.hpp"
#include "cak/patterns.hpp"
#include "oracles.hpp"

using namespace cak;

TEST_CASE("rng streams are keyed, not sequential") {
  Rng a(1, 5), b(1, 5), c(1, 6), d(2, 5);
  auto x = a.next();
  CHECK(x == b.next());
  CHECK(x != c.next());
  CHECK(x != d.next());
  Rng r(9);
  for (int i = 0; i < 1000; ++i) {
    int u = r.uniform(-3, 4);
    CHECK(u >= -3);
    CHECK(u <= 4);
    double f = r.unit();
    CHECK(f >= 0.0);
    CHECK(f < 1.0);
  }
  auto p = r.permutation(20);
  CHECK(std::set<int>(p.begin(), p.end()).size() == 20);
}

TEST_CASE("random chordal basics") {
  GenConfig one;
  one.n = 1;
  CHECK(random_chordal(one).order() == 1);
  GenConfig full;
  full.n = 9;
  full.density = 1.0;
  CHECK(random_chordal(full) == oracle::complete(9));
  GenConfig cfg;
  cfg.n = 10;
  cfg.seed = 123;
  CHECK(serialize_graph(random_chordal(cfg)) == serialize_graph(random_chordal(cfg)));
  for (std::uint64_t i = 0; i < 200; ++i) {
    cfg.index = i;
    cfg.n = 1 + static_cast<int>(i % 15);
    cfg.density = static_cast<double>(i % 11) / 10.0;
    CHECK(is_chordal(random_chordal(cfg)));
  }
}

TEST_CASE("strongly chordal and ptolemaic variants pass their recognizers") {
  for (std::uint64_t i = 0; i < 80; ++i) {
    GenConfig cfg;
    cfg.n = 3 + static_cast<int>(i % 10);
    cfg.index = i;
    cfg.seed = 61;
    cfg.density = 0.2;
    auto sc = random_strongly_chordal(cfg);
    CHECK(is_strongly_chordal(sc));
    auto pt = random_ptolemaic(cfg);
    CHECK(is_ptolemaic(pt));
    auto a = build_arrangement(pt);
    CHECK(a.arc_count() <= a.node_count() - 1);
  }
  GenConfig tiny;
  tiny.n = 3;
  for (std::uint64_t i = 0; i < 50; ++i) {
    tiny.index = i;
    CHECK(is_strongly_chordal(random_chordal(tiny)));
  }
}

TEST_CASE("planted variants") {
  GenConfig cfg;
  cfg.variant = Variant::planted;
  cfg.pattern = 7;
  cfg.n = 14;
  for (std::uint64_t i = 0; i < 10; ++i) {
    cfg.index = i;
    auto g = generate(cfg);
    CHECK(g.order() == 14);
    CHECK(is_strongly_chordal(g));
    CHECK(find_induced_pattern(g, 7).has_value());
  }
  cfg.n = 11;
  CHECK_THROWS_AS(planted_pattern(cfg), PreconditionError);

  GenConfig s;
  s.variant = Variant::planted_sun;
  s.n = 9;
  s.sun_k = 4;
  auto g = generate(s);
  CHECK(is_chordal(g));
  CHECK_FALSE(is_strongly_chordal(g));
  s.n = 7;
  CHECK_THROWS_AS(generate(s), PreconditionError);
}

TEST_CASE("leaf power generator") {
  auto star = random_leaf_power(5, 2, 1, 0);
  CHECK_FALSE(verify_leaf_root(star.graph, star.model).has_value());
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto inst = random_leaf_power(1 + static_cast<int>(i % 10), 2 + static_cast<int>(i % 5), 62, i);
    CHECK(oracle::is_leaf_root(inst.graph, inst.model));
    CHECK(is_strongly_chordal(inst.graph));
    CHECK_FALSE(has_bad_2_cycle(build_arrangement(inst.graph)));
    for (const auto& e : inst.model.edges) {
      CHECK(e.weight >= 1);
      CHECK(e.weight <= 2);
    }
  }
  CHECK_THROWS_AS(random_leaf_power(4, 1, 0), PreconditionError);
  LeafRootModel caterpillar{8, 2, {{4, 5, 1}, {5, 6, 1}, {6, 7, 1}, {0, 4, 1}, {1, 5, 1}, {2, 6, 1}, {3, 7, 1}},
                            {0, 1, 2, 3}};
  CHECK(leaf_power_graph(caterpillar).edge_count() == 0);
}

TEST_CASE("class hierarchy on generated corpora") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    GenConfig cfg;
    cfg.n = 4 + static_cast<int>(i % 9);
    cfg.index = i;
    cfg.seed = 63;
    cfg.density = 0.05 + 0.004 * static_cast<double>(i);
    auto g = random_chordal(cfg);
    bool pt = is_ptolemaic(g), sc = is_strongly_chordal(g);
    bool free = !sc || !has_bad_2_cycle(build_arrangement(g));
    if (pt) CHECK(free);
    if (pt) CHECK(sc);
    CHECK(is_chordal(g));
  }
}

TEST_CASE("corpus directory and manifest") {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / "cak_corpus_test";
  fs::remove_all(dir);
  GenConfig cfg;
  cfg.variant = Variant::ptolemaic;
  cfg.n = 6;
  cfg.seed = 4;
  auto names = write_corpus(dir.string(), cfg, 3);
  REQUIRE(names.size() == 3);
  std::ifstream in(dir / "manifest.json");
  auto manifest = Json::parse(in);
  CHECK(manifest.size() == 3);
  CHECK(manifest[2]["index"] == 2);
  CHECK(manifest[0]["variant"] == "ptolemaic");
  cfg.index = 1;
  CHECK(read_graph_file((dir / names[1]).string()) == generate(cfg));
  fs::remove_all(dir);
  CHECK(parse_variant("leaf_power") == Variant::leaf_power);
  CHECK_THROWS_AS(parse_variant("nope"), PreconditionError);
}
