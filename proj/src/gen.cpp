#include "cak/gen.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "cak/chordal.hpp"
#include "cak/errors.hpp"
#include "cak/patterns.hpp"

namespace cak {

namespace {

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : state_(mix(seed) ^ mix(stream + 0x9e3779b97f4a7c15ULL)) {}

std::uint64_t Rng::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  return mix(state_);
}

int Rng::uniform(int lo, int hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next() % span);
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::vector<int> Rng::permutation(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[uniform(0, i)]);
  return p;
}

namespace {

constexpr std::array<std::pair<Variant, std::string_view>, 6> kVariants = {{
    {Variant::chordal, "chordal"},
    {Variant::strongly_chordal, "strongly_chordal"},
    {Variant::ptolemaic, "ptolemaic"},
    {Variant::leaf_power, "leaf_power"},
    {Variant::planted, "planted"},
    {Variant::planted_sun, "planted_sun"},
}};

// One stream per rejection attempt, derived from the instance stream.
Rng attempt_rng(const GenConfig& cfg, int attempt) {
  return Rng(cfg.seed, mix(cfg.index) ^ mix(static_cast<std::uint64_t>(attempt) * 0x632be59bd9b4e019ULL));
}

Graph chordal_from(Rng& rng, int n, double density) {
  if (n <= 0) throw PreconditionError("random_chordal: n must be positive");
  const int m = std::max(n, 2);
  std::vector<std::vector<int>> tree(m);
  for (int i = 1; i < m; ++i) {
    int p = rng.uniform(0, i - 1);
    tree[i].push_back(p);
    tree[p].push_back(i);
  }
  std::vector<std::vector<char>> member(n, std::vector<char>(m, 0));
  for (int v = 0; v < n; ++v) {
    int size = 1;
    for (int i = 1; i < m; ++i) size += rng.bernoulli(density);
    std::vector<int> nodes{rng.uniform(0, m - 1)};
    member[v][nodes[0]] = 1;
    while (static_cast<int>(nodes.size()) < size) {
      std::vector<int> frontier;
      for (int x : nodes)
        for (int y : tree[x])
          if (!member[v][y]) frontier.push_back(y);
      std::sort(frontier.begin(), frontier.end());
      frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
      int y = frontier[rng.uniform(0, static_cast<int>(frontier.size()) - 1)];
      member[v][y] = 1;
      nodes.push_back(y);
    }
  }
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      for (int x = 0; x < m; ++x)
        if (member[u][x] && member[v][x]) {
          edges.push_back({u, v});
          break;
        }
  return Graph(n, edges);
}

// Adds simplicial vertices, each joined to a random clique, until n vertices.
Graph pad_simplicial(Rng& rng, const Graph& base, int n, double density) {
  std::vector<Edge> edges = base.edges();
  std::vector<VertexSet> adj(n);
  for (auto e : edges) adj[e.u].insert(e.v), adj[e.v].insert(e.u);
  for (int x = base.order(); x < n; ++x) {
    int v = rng.uniform(0, x - 1);
    VertexSet clique{v};
    auto order = adj[v].members();
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.uniform(0, static_cast<int>(i) - 1)]);
    for (int u : order)
      if (clique.is_subset_of(adj[u]) && rng.bernoulli(density)) clique.insert(u);
    for (int u : clique) {
      edges.push_back({u, x});
      adj[u].insert(x);
      adj[x].insert(u);
    }
  }
  return Graph(n, edges);
}

Graph relabel(Rng& rng, const Graph& g) {
  auto perm = rng.permutation(g.order());
  return Graph(g.order(), permute(g, perm).edges());
}

Graph sun_graph(int k) {
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) edges.push_back({i, j});
  for (int i = 0; i < k; ++i) {
    edges.push_back({i, k + i});
    edges.push_back({i, k + (i + 1) % k});
  }
  return Graph(2 * k, edges);
}

}  // namespace

std::string_view variant_name(Variant v) {
  for (auto [var, name] : kVariants)
    if (var == v) return name;
  return "unknown";
}

Variant parse_variant(std::string_view name) {
  for (auto [var, n] : kVariants)
    if (n == name) return var;
  throw PreconditionError("unknown variant '" + std::string(name) + "'");
}

Graph random_chordal(const GenConfig& cfg) {
  Rng rng = attempt_rng(cfg, 0);
  return chordal_from(rng, cfg.n, cfg.density);
}

Graph random_strongly_chordal(const GenConfig& cfg) {
  if (cfg.variant == Variant::planted) return planted_pattern(cfg);
  for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
    Rng rng = attempt_rng(cfg, attempt);
    auto g = chordal_from(rng, cfg.n, cfg.density);
    if (is_strongly_chordal(g)) return g;
  }
  throw GenerationError("random_strongly_chordal: no instance after " + std::to_string(cfg.max_attempts) + " attempts");
}

Graph planted_pattern(const GenConfig& cfg) {
  const auto base = pattern_graph(cfg.pattern);
  if (cfg.n < base.order())
    throw PreconditionError("planted: n=" + std::to_string(cfg.n) + " is below the pattern size " +
                            std::to_string(base.order()));
  for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
    Rng rng = attempt_rng(cfg, attempt);
    auto g = pad_simplicial(rng, Graph(base.order(), base.edges()), cfg.n, cfg.density);
    if (is_strongly_chordal(g)) return relabel(rng, g);
  }
  throw GenerationError("planted: no strongly chordal padding after " + std::to_string(cfg.max_attempts) + " attempts");
}

Graph planted_sun(const GenConfig& cfg) {
  if (cfg.sun_k < 3) throw PreconditionError("planted_sun: k must be at least 3");
  if (cfg.n < 2 * cfg.sun_k) throw PreconditionError("planted_sun: n is below the sun size");
  Rng rng = attempt_rng(cfg, 0);
  return relabel(rng, pad_simplicial(rng, sun_graph(cfg.sun_k), cfg.n, cfg.density));
}

Graph random_ptolemaic(const GenConfig& cfg) {
  for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
    Rng rng = attempt_rng(cfg, attempt);
    auto g = chordal_from(rng, cfg.n, cfg.density);
    if (is_ptolemaic(g)) return g;
  }
  throw GenerationError("random_ptolemaic: no instance after " + std::to_string(cfg.max_attempts) + " attempts");
}

LeafPowerInstance random_leaf_power(int n, int k, std::uint64_t seed, std::uint64_t index) {
  if (n < 1) throw PreconditionError("random_leaf_power: n must be positive");
  if (k < 2) throw PreconditionError("random_leaf_power: k must be at least 2");
  Rng rng(seed, mix(index) ^ 0x5851f42d4c957f2dULL);
  LeafRootModel m;
  m.k = k;
  if (n == 1) {
    m.nodes = 1;
    m.leaf_of = {0};
    return {Graph(1), m};
  }
  // Leaves are nodes 0..n-1; internal nodes follow.
  std::vector<std::pair<int, int>> edges;
  int internal = 1;
  edges = {{0, n}, {1, n}};
  if (n >= 3) edges.push_back({2, n});
  for (int leaf = 3; leaf < n; ++leaf) {
    int choices = static_cast<int>(edges.size()) + internal;
    int pick = rng.uniform(0, choices - 1);
    if (pick < static_cast<int>(edges.size())) {
      auto [a, b] = edges[pick];
      int x = n + internal++;
      edges[pick] = {a, x};
      edges.push_back({x, b});
      edges.push_back({leaf, x});
    } else {
      edges.push_back({leaf, n + pick - static_cast<int>(edges.size())});
    }
  }
  m.nodes = n + internal;
  for (auto [a, b] : edges) m.edges.push_back({a, b, rng.uniform(1, 2)});
  auto perm = rng.permutation(n);
  m.leaf_of.assign(n, -1);
  for (int leaf = 0; leaf < n; ++leaf) m.leaf_of[perm[leaf]] = leaf;
  return {leaf_power_graph(m), m};
}

Graph generate(const GenConfig& cfg) {
  switch (cfg.variant) {
    case Variant::chordal:
      return random_chordal(cfg);
    case Variant::strongly_chordal:
    case Variant::planted:
      return random_strongly_chordal(cfg);
    case Variant::ptolemaic:
      return random_ptolemaic(cfg);
    case Variant::leaf_power:
      return random_leaf_power(cfg.n, cfg.k, cfg.seed, cfg.index).graph;
    case Variant::planted_sun:
      return planted_sun(cfg);
  }
  throw PreconditionError("unknown variant");
}

std::vector<std::string> write_corpus(const std::string& dir, GenConfig cfg, int count) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  nlohmann::json manifest = nlohmann::json::array();
  std::vector<std::string> names;
  for (int i = 0; i < count; ++i) {
    cfg.index = static_cast<std::uint64_t>(i);
    auto g = generate(cfg);
    std::ostringstream name;
    name << variant_name(cfg.variant) << '_' << std::setw(4) << std::setfill('0') << i << ".graph";
    write_graph_file(g, (fs::path(dir) / name.str()).string());
    names.push_back(name.str());
    manifest.push_back({{"file", name.str()},
                        {"variant", variant_name(cfg.variant)},
                        {"n", cfg.n},
                        {"seed", cfg.seed},
                        {"index", cfg.index},
                        {"density", cfg.density},
                        {"k", cfg.k},
                        {"pattern", cfg.pattern},
                        {"sun_k", cfg.sun_k}});
  }
  std::ofstream out(fs::path(dir) / "manifest.json");
  out << manifest.dump(2) << '\n';
  return names;
}

}  // namespace cak
