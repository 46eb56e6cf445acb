#include "cak/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "cak/arrangement.hpp"
#include "cak/chordal.hpp"
#include "cak/cycles.hpp"
#include "cak/gen.hpp"
#include "cak/leafroot.hpp"
#include "cak/patterns.hpp"

namespace cak {

namespace {

constexpr std::array<std::pair<CampaignKind, std::string_view>, 6> kNames = {{
    {CampaignKind::theorem5, "theorem5"},
    {CampaignKind::theorem10, "theorem10"},
    {CampaignKind::lemmas, "lemmas"},
    {CampaignKind::corollary11, "corollary11"},
    {CampaignKind::sweep, "sweep"},
    {CampaignKind::leafroot, "leafroot"},
}};

struct Outcome {
  bool skipped = false;
  std::vector<std::string> failures;
  std::map<std::string, long> stats;
  std::string graph;

  void fail(std::string msg) { failures.push_back(std::move(msg)); }
  void check(bool ok, const std::string& msg) {
    if (!ok) fail(msg);
  }
  void count(const std::string& key, long by = 1) { stats[key] += by; }
};

double pick_density(Rng& rng) { return 0.03 + 0.5 * rng.unit() * rng.unit(); }

int pick_n(Rng& rng, int lo, int hi) { return rng.uniform(std::min(lo, hi), hi); }

void theorem10_instance(const CampaignConfig& cfg, std::uint64_t i, Outcome& out) {
  Rng rng(cfg.seed, i);
  GenConfig gc;
  gc.seed = cfg.seed;
  gc.index = i;
  gc.density = pick_density(rng);
  gc.variant = Variant::strongly_chordal;
  int planted = 0;
  if (i % 4 == 0) {
    std::vector<int> fits;
    for (int p = 1; p <= 7; ++p)
      if (pattern_order(p) <= cfg.n) fits.push_back(p);
    if (!fits.empty()) {
      planted = fits[(i / 4) % fits.size()];
      gc.variant = Variant::planted;
      gc.pattern = planted;
      gc.n = pick_n(rng, pattern_order(planted), cfg.n);
    }
  }
  if (!planted) gc.n = pick_n(rng, std::max(1, cfg.n / 2), cfg.n);
  const Graph g = generate(gc);
  out.graph = serialize_graph(g);
  out.check(is_strongly_chordal(g), "generator produced a graph that is not strongly chordal");
  if (planted) {
    out.count("planted");
    out.check(find_induced_pattern(g, planted).has_value(), "planted pattern G" + std::to_string(planted) + " not found");
  }
  const auto a = build_arrangement(g);
  const auto bad2 = find_bad_2_cycle(a);
  const auto pattern = find_induced_pattern(g);
  if (bad2.has_value() != pattern.has_value()) {
    out.fail(bad2 ? "bad 2-cycle without an induced G1..G7" : "induced G1..G7 without a bad 2-cycle");
    return;
  }
  if (!bad2) return;
  out.count("positives");
  out.check(verify_bad_2_cycle(a, *bad2), "bad 2-cycle witness failed verification");
  out.check(verify_pattern_match(g, *pattern), "pattern match failed verification");
  const auto ob = extract_obstruction(g, a, *bad2);
  out.check(verify_pattern_match(g, ob.match), "extracted obstruction failed verification");
  out.count("extracted");
  out.count("case " + ob.case_label.substr(0, 1));
}

void theorem5_instance(const CampaignConfig& cfg, std::uint64_t i, Outcome& out) {
  Rng rng(cfg.seed, i);
  GenConfig gc;
  gc.seed = cfg.seed;
  gc.index = i;
  gc.density = pick_density(rng);
  Graph g;
  if (i % 5 == 0 && cfg.n >= 6) {
    gc.variant = Variant::planted_sun;
    gc.sun_k = cfg.n >= 8 && rng.bernoulli(0.5) ? 4 : 3;
    gc.n = pick_n(rng, 2 * gc.sun_k, cfg.n);
    g = planted_sun(gc);
    out.count("planted_sun");
  } else {
    gc.n = pick_n(rng, 3, cfg.n);
    g = random_chordal(gc);
  }
  out.graph = serialize_graph(g);
  const bool strong = is_strongly_chordal(g);
  const auto a = build_arrangement(g);
  const auto cycle = find_bad_cycle_k_ge_3(a, static_cast<int>(a.sinks().size()), cfg.budget);
  if (cycle.status == SearchStatus::budget_exceeded) {
    out.skipped = true;
    return;
  }
  if (!strong) out.count("not_strongly_chordal");
  out.check(cycle.found() == !strong, cycle.found() ? "bad k-cycle in a strongly chordal graph"
                                                    : "no bad k-cycle in a graph that is not strongly chordal");
  if (cycle.found()) out.check(verify_bad_k_cycle(a, *cycle.value), "bad k-cycle witness failed verification");
  const auto sun = find_sun(g, g.order(), cfg.budget);
  if (sun.status != SearchStatus::budget_exceeded)
    out.check(sun.found() == !strong, "sun search disagrees with strong chordality");
}

void lemmas_instance(const CampaignConfig& cfg, std::uint64_t i, Outcome& out) {
  Rng rng(cfg.seed, i);
  GenConfig gc;
  gc.seed = cfg.seed;
  gc.index = i;
  gc.density = pick_density(rng);
  gc.n = pick_n(rng, 2, cfg.n);
  Graph g;
  if (i % 10 == 9 && cfg.n >= 6) {
    gc.n = std::max(gc.n, 6);
    g = planted_sun(gc);
    out.count("planted_sun");
  } else {
    g = random_chordal(gc);
  }
  out.graph = serialize_graph(g);
  const auto a = build_arrangement(g);
  const auto& sinks = a.sinks();

  for (int c1 : sinks)
    for (int c2 : sinks) {
      if (c1 == c2) continue;
      const auto& s1 = a.node(c1);
      const auto& s2 = a.node(c2);
      int x = witness_nonadjacent_vertex(g, s1, s2);
      out.check(s1.contains(x) && !s2.contains(x) && !g.neighbors(x).intersects(s2 - s1), "lemma 1 witness is wrong");
      out.count("lemma1");
    }
  out.check(check_sink_intersections(a), "lemma 3 identities fail");
  out.check(check_closure_fixpoint(a), "lemma 4 closure is not a fixpoint");
  out.check(check_no_transitive_arcs(a), "transitive arc in the Hasse diagram");
  out.check(check_hasse_reachability(a), "reachability differs from inclusion");
  out.count("lemma3", a.node_count());

  if (is_strongly_chordal(g)) {
    out.count("strongly_chordal");
    for (int id = 0; id < a.node_count(); ++id) {
      const int ids[] = {id};
      auto cover = two_clique_cover(a, ids);
      VertexSet meet = a.node(cover.first);
      bool ok = a.is_sink(cover.first) && a.reaches(id, cover.first);
      if (cover.second) {
        ok = ok && a.is_sink(*cover.second) && a.reaches(id, *cover.second);
        meet &= a.node(*cover.second);
      }
      out.check(ok && meet == a.node(id), "lemma 2 cover is wrong for node " + std::to_string(id));
      out.count("lemma2");
    }
    std::vector<std::array<int, 3>> triples;
    for (int y = 0; y < a.node_count(); ++y)
      for (int z = y + 1; z < a.node_count(); ++z) {
        auto meet = a.node(y) & a.node(z);
        if (meet.empty()) continue;
        auto x = a.find(meet);
        if (x && *x != y && *x != z) triples.push_back({*x, y, z});
      }
    for (std::size_t k = triples.size(); k > 1; --k)
      std::swap(triples[k - 1], triples[rng.uniform(0, static_cast<int>(k) - 1)]);
    if (triples.size() > 50) triples.resize(50);
    for (auto [x, y, z] : triples) {
      auto [c1, c2] = sink_pair_for_intersection(a, x, y, z);
      out.check(a.is_sink(c1) && a.is_sink(c2) && a.reaches(y, c1) && a.reaches(z, c2) &&
                    (a.node(c1) & a.node(c2)) == a.node(x),
                "lemma 6 sink pair is wrong");
      out.count("lemma6");
    }
  }

  VertexSet sub;
  for (int v = 0; v < g.order(); ++v)
    if (rng.bernoulli(0.6)) sub.insert(v);
  if (sub.empty()) sub.insert(rng.uniform(0, g.order() - 1));
  auto m = embed_arrangement(g, sub);
  out.check(verify_embedding(m), "lemma 7 embedding failed verification");
  out.count("lemma7");
}

void corollary11_instance(const CampaignConfig& cfg, std::uint64_t i, Outcome& out) {
  Rng rng(cfg.seed, i);
  const int n = pick_n(rng, 1, cfg.n);
  const int k = rng.uniform(2, 6);
  auto inst = random_leaf_power(n, k, cfg.seed, i);
  out.graph = serialize_graph(inst.graph);
  out.check(!verify_leaf_root(inst.graph, inst.model).has_value(), "generated model does not verify");
  out.check(is_strongly_chordal(inst.graph), "leaf power is not strongly chordal");
  const auto a = build_arrangement(inst.graph);
  out.check(!has_bad_2_cycle(a), "bad 2-cycle in a leaf power");
  out.check(!find_induced_pattern(inst.graph).has_value(), "induced G1..G7 in a leaf power");
  out.check(!non_leaf_power_certificate(inst.graph).has_value(), "non-leaf-power certificate on a leaf power");
}

void leafroot_instance(const CampaignConfig& cfg, std::uint64_t i, Outcome& out) {
  Rng rng(cfg.seed, i);
  const int n = pick_n(rng, 1, std::min(cfg.n, 16));
  const int k = rng.uniform(2, 5);
  auto inst = random_leaf_power(n, k, cfg.seed, i);
  out.graph = serialize_graph(inst.graph);
  LeafRootBounds bounds{n, k, k};
  auto r = search_leaf_root(inst.graph, bounds, cfg.budget);
  if (r.status == LeafRootStatus::budget_exceeded) {
    out.skipped = true;
    return;
  }
  if (r.status != LeafRootStatus::found) {
    out.fail("no model found within bounds");
    return;
  }
  out.check(!verify_leaf_root(inst.graph, *r.model).has_value(), "search returned a model that does not verify");
  out.check(!verify_leaf_root(inst.graph, expand_model(*r.model)).has_value(), "expanded model does not verify");
  out.count("visited", static_cast<long>(r.visited));
}

void sweep_instance(const Graph& g, Outcome& out) {
  out.graph = serialize_graph(g);
  if (!is_chordal(g)) return;
  out.count("chordal");
  if (!is_strongly_chordal(g)) return;
  out.count("strongly_chordal");
  const auto a = build_arrangement(g);
  out.check(!has_bad_2_cycle(a), "bad 2-cycle below ten vertices");
  out.check(!find_induced_pattern(g).has_value(), "induced G1..G7 below ten vertices");
}

// Adjacency code over pairs (i, j), i < j, in row order.
using Code = std::uint64_t;

int pair_bit(int i, int j) { return j * (j - 1) / 2 + i; }

Code canonical_code(int n, const std::vector<VertexSet>& adj) {
  std::vector<int> verts(n);
  std::iota(verts.begin(), verts.end(), 0);
  auto key = [&](int v) {
    std::vector<int> nd;
    for (int u : adj[v]) nd.push_back(adj[u].size());
    std::sort(nd.begin(), nd.end());
    return std::make_pair(adj[v].size(), nd);
  };
  std::vector<std::pair<int, std::vector<int>>> keys(n);
  for (int v = 0; v < n; ++v) keys[v] = key(v);
  std::sort(verts.begin(), verts.end(), [&](int a, int b) { return keys[a] < keys[b]; });
  // Positions may only be filled by vertices of the same invariant class.
  std::vector<int> cls(n);
  for (int p = 0; p < n; ++p) cls[p] = p > 0 && keys[verts[p]] == keys[verts[p - 1]] ? cls[p - 1] : p;
  Code best = 0;
  std::vector<int> at(n, -1);
  std::vector<char> used(n, 0);
  std::function<void(int, Code)> rec = [&](int pos, Code code) {
    if (pos == n) {
      best = std::max(best, code);
      return;
    }
    for (int p = cls[pos]; p < n && cls[p] == cls[pos]; ++p) {
      int v = verts[p];
      if (used[v]) continue;
      Code c = code;
      for (int q = 0; q < pos; ++q)
        if (adj[v].contains(at[q])) c |= Code{1} << pair_bit(q, pos);
      used[v] = 1;
      at[pos] = v;
      rec(pos + 1, c);
      used[v] = 0;
    }
  };
  rec(0, 0);
  return best;
}

Graph graph_from_code(int n, Code code) {
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((code >> pair_bit(i, j)) & 1U) edges.push_back({i, j});
  return Graph(n, edges);
}

std::vector<Outcome> run_parallel(std::size_t units, int jobs, const std::function<void(std::size_t, Outcome&)>& work) {
  std::vector<Outcome> results(units);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < units; i = next++) {
      try {
        work(i, results[i]);
      } catch (const InvariantViolation& e) {
        results[i].fail(std::string("invariant violation: ") + e.what());
      } catch (const std::exception& e) {
        results[i].fail(std::string("error: ") + e.what());
      }
    }
  };
  int threads = jobs > 0 ? jobs : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  threads = static_cast<int>(std::min<std::size_t>(threads, std::max<std::size_t>(units, 1)));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace

std::string_view campaign_name(CampaignKind k) {
  for (auto [kind, name] : kNames)
    if (kind == k) return name;
  return "unknown";
}

CampaignKind parse_campaign(std::string_view name) {
  for (auto [kind, n] : kNames)
    if (n == name) return kind;
  throw PreconditionError("unknown campaign '" + std::string(name) + "'");
}

std::vector<Graph> connected_graphs(int n) {
  if (n < 1 || n > 8) throw PreconditionError("connected_graphs supports 1 <= n <= 8");
  std::set<Code> level{0};
  for (int m = 2; m <= n; ++m) {
    std::set<Code> grown;
    for (Code base : level) {
      std::vector<VertexSet> adj(m);
      for (int j = 1; j < m - 1; ++j)
        for (int i = 0; i < j; ++i)
          if ((base >> pair_bit(i, j)) & 1U) adj[i].insert(j), adj[j].insert(i);
      for (int mask = 0; mask < (1 << (m - 1)); ++mask) {
        auto ext = adj;
        for (int v = 0; v < m - 1; ++v)
          if ((mask >> v) & 1) ext[v].insert(m - 1), ext[m - 1].insert(v);
        grown.insert(canonical_code(m, ext));
      }
    }
    level = std::move(grown);
  }
  std::vector<Graph> out;
  for (Code c : level) {
    Graph g = graph_from_code(n, c);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

CampaignReport run_campaign(const CampaignConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  CampaignReport report;
  report.kind = cfg.kind;
  report.config = cfg;
  std::vector<Outcome> results;
  std::vector<std::uint64_t> ids;

  if (cfg.kind == CampaignKind::sweep) {
    std::vector<Graph> graphs;
    for (int m = 1; m <= cfg.n; ++m) {
      auto level = connected_graphs(m);
      report.stats["connected n=" + std::to_string(m)] = static_cast<long>(level.size());
      graphs.insert(graphs.end(), level.begin(), level.end());
    }
    results = run_parallel(graphs.size(), cfg.jobs, [&](std::size_t i, Outcome& o) { sweep_instance(graphs[i], o); });
  } else {
    void (*fn)(const CampaignConfig&, std::uint64_t, Outcome&) = nullptr;
    switch (cfg.kind) {
      case CampaignKind::theorem5:
        fn = theorem5_instance;
        break;
      case CampaignKind::theorem10:
        fn = theorem10_instance;
        break;
      case CampaignKind::lemmas:
        fn = lemmas_instance;
        break;
      case CampaignKind::corollary11:
        fn = corollary11_instance;
        break;
      case CampaignKind::leafroot:
        fn = leafroot_instance;
        break;
      case CampaignKind::sweep:
        break;
    }
    if (cfg.count < 0) throw PreconditionError("count must be non-negative");
    if (cfg.n < 1) throw PreconditionError("n must be positive");
    results = run_parallel(static_cast<std::size_t>(cfg.count), cfg.jobs,
                           [&](std::size_t i, Outcome& o) { fn(cfg, i, o); });
  }

  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& o = results[i];
    ++report.instances;
    if (o.skipped) ++report.skipped;
    for (const auto& [k, v] : o.stats) report.stats[k] += v;
    for (const auto& msg : o.failures) report.failures.push_back({i, o.graph, msg});
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string report_to_text(const CampaignReport& r) {
  std::ostringstream out;
  out << "campaign " << campaign_name(r.kind) << ": " << r.instances << " instances, " << r.counterexamples()
      << " counterexamples, " << r.skipped << " over budget, " << r.seconds << " s\n";
  for (const auto& [k, v] : r.stats) out << "  " << k << ": " << v << '\n';
  for (const auto& f : r.failures) out << "  FAIL #" << f.index << ": " << f.message << '\n' << f.graph;
  return out.str();
}

Json report_to_json(const CampaignReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back({{"index", f.index}, {"message", f.message}, {"graph", f.graph}});
  return {{"campaign", campaign_name(r.kind)},
          {"count", r.config.count},
          {"n", r.config.n},
          {"seed", r.config.seed},
          {"instances", r.instances},
          {"counterexamples", r.counterexamples()},
          {"skipped", r.skipped},
          {"stats", r.stats},
          {"failures", failures},
          {"seconds", r.seconds}};
}

}  // namespace cak
