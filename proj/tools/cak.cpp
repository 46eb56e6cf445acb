// Command-line front end.
//
// Exit codes: 0 success, 1 counterexample (or a model that does not verify),
// 2 input error, 3 internal invariant violation.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cak/arrangement.hpp"
#include "cak/campaign.hpp"
#include "cak/cycles.hpp"
#include "cak/dot.hpp"
#include "cak/gen.hpp"
#include "cak/json_io.hpp"
#include "cak/leafroot.hpp"
#include "cak/patterns.hpp"
#include "cak/verdict.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kCounterexample = 1;
constexpr int kInputError = 2;
constexpr int kInternalError = 3;

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

cak::Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cak::ParseError(0, "cannot open " + path);
  try {
    return cak::Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw cak::ParseError(0, path + ": " + e.what());
  }
}

int cmd_classify(const std::string& path, bool json, int leafroot_n, const std::string& report_path) {
  const auto g = cak::read_graph_file(path);
  cak::ClassifyOptions opts;
  opts.leafroot_max_n = leafroot_n;
  const auto v = cak::classify(g, opts);
  if (json)
    std::cout << cak::verdict_to_json(v).dump(2) << '\n';
  else
    std::cout << cak::verdict_to_text(v);
  if (!v.consistent) {
    cak::Json bug{{"input", path}, {"graph", cak::serialize_graph(g)}, {"verdict", cak::verdict_to_json(v)}};
    write_text(report_path, bug.dump(2) + "\n");
    std::cerr << "inconsistency: " << v.inconsistency << " (report written to " << report_path << ")\n";
    return kInternalError;
  }
  return kOk;
}

int cmd_arrangement(const std::string& path, const std::string& dot, const std::string& highlight, bool witness) {
  const auto g = cak::read_graph_file(path);
  const auto a = cak::build_arrangement(g);
  cak::DotHighlight h;
  if (!highlight.empty()) {
    auto j = read_json(highlight);
    if (j.contains("bad2cycle")) j = j.at("bad2cycle");
    if (j.is_null()) throw cak::PreconditionError(highlight + " holds no bad 2-cycle");
    h = cak::highlight_of(cak::bad2_from_json(a, j));
  } else if (witness) {
    if (!a.chordal()) throw cak::PreconditionError("witness highlighting needs a chordal graph");
    if (auto w = cak::find_bad_2_cycle(a)) h = cak::highlight_of(*w);
  }
  if (!dot.empty()) write_text(dot, cak::arrangement_to_dot(a, h));
  if (dot != "-")
    std::cout << a.node_count() << " nodes, " << a.arc_count() << " arcs, " << a.sinks().size() << " sinks"
              << (a.chordal() ? "" : " (graph is not chordal)") << '\n';
  return kOk;
}

int cmd_campaign(cak::CampaignConfig cfg, const std::string& name, bool json) {
  cfg.kind = cak::parse_campaign(name);
  const auto r = cak::run_campaign(cfg);
  if (json)
    std::cout << cak::report_to_json(r).dump(2) << '\n';
  else
    std::cout << cak::report_to_text(r);
  return r.failures.empty() ? kOk : kCounterexample;
}

int cmd_leafroot_verify(const std::string& graph, const std::string& model) {
  const auto g = cak::read_graph_file(graph);
  const auto m = cak::read_model_file(model);
  if (auto bad = cak::verify_leaf_root(g, m)) {
    std::cout << "violation: " << g.label(bad->u) << ' ' << g.label(bad->v) << " at distance " << bad->distance
              << (bad->edge ? ", edge needs <= " : ", non-edge needs > ") << m.k << '\n';
    return kCounterexample;
  }
  std::cout << "ok: " << m.k << "-leaf root\n";
  return kOk;
}

int cmd_leafroot_search(const std::string& graph, cak::LeafRootBounds bounds, const std::string& out,
                        const std::string& dot) {
  const auto g = cak::read_graph_file(graph);
  const auto r = cak::search_leaf_root(g, bounds);
  switch (r.status) {
    case cak::LeafRootStatus::found:
      std::cout << "found " << r.model->k << "-leaf root (" << r.visited << " search nodes)\n";
      if (!out.empty()) write_text(out, cak::serialize_model(*r.model));
      if (!dot.empty()) write_text(dot, cak::model_to_dot(*r.model, &g));
      if (out.empty() && dot.empty()) std::cout << cak::serialize_model(*r.model);
      break;
    case cak::LeafRootStatus::not_strongly_chordal:
      std::cout << "refused: not strongly chordal, so not a leaf power\n";
      break;
    case cak::LeafRootStatus::exhausted:
      std::cout << "exhausted: no model with max_internal=" << r.bounds.max_internal
                << " max_weight=" << r.bounds.max_weight << " max_k=" << r.bounds.max_k
                << " (this does not prove non-membership)\n";
      break;
    case cak::LeafRootStatus::budget_exceeded:
      std::cout << "budget exceeded after " << r.visited << " search nodes\n";
      break;
  }
  return kOk;
}

int cmd_gen(cak::GenConfig cfg, const std::string& variant, const std::string& dir, int count) {
  cfg.variant = cak::parse_variant(variant);
  auto names = cak::write_corpus(dir, cfg, count);
  std::cout << "wrote " << names.size() << " graphs to " << dir << '\n';
  return kOk;
}

int cmd_fixture(int id, const std::string& out) {
  write_text(out, cak::serialize_graph(cak::pattern_graph(id)));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clique arrangements, bad 2-cycles and leaf-power obstructions"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string path;
  bool json = false;
  int leafroot_n = 0;
  std::string report = "cak-bug-report.json";
  auto* classify = app.add_subcommand("classify", "Classify a graph and extract witnesses");
  classify->add_option("file", path, "Graph file")->required();
  classify->add_flag("--json", json, "Emit JSON");
  classify->add_option("--leafroot", leafroot_n, "Search a leaf root when n <= this bound");
  classify->add_option("--report", report, "Where to write a bug report on inconsistency");
  classify->callback([&] { action = [&] { return cmd_classify(path, json, leafroot_n, report); }; });

  std::string dot, highlight;
  bool witness = false;
  auto* arrangement = app.add_subcommand("arrangement", "Build the clique arrangement");
  arrangement->add_option("file", path, "Graph file")->required();
  arrangement->add_option("--dot", dot, "DOT output file ('-' for stdout)");
  arrangement->add_option("--highlight", highlight, "Witness JSON whose nodes and paths are drawn bold");
  arrangement->add_flag("--witness", witness, "Highlight the extremal bad 2-cycle, if any");
  arrangement->callback([&] { action = [&] { return cmd_arrangement(path, dot, highlight, witness); }; });

  cak::CampaignConfig ccfg;
  std::string cname;
  auto* campaign = app.add_subcommand("campaign", "Run a seeded property campaign");
  campaign->add_option("name", cname, "theorem5 | theorem10 | lemmas | corollary11 | sweep | leafroot")->required();
  campaign->add_option("--count", ccfg.count, "Instances");
  campaign->add_option("--n", ccfg.n, "Largest instance size");
  campaign->add_option("--seed", ccfg.seed, "Seed");
  campaign->add_option("--jobs", ccfg.jobs, "Worker threads (0: all cores)");
  campaign->add_flag("--json", json, "Emit JSON");
  campaign->callback([&] { action = [&] { return cmd_campaign(ccfg, cname, json); }; });

  std::string model, out;
  cak::LeafRootBounds bounds;
  auto* leafroot = app.add_subcommand("leafroot", "Leaf-root tools");
  leafroot->require_subcommand(1);
  auto* verify = leafroot->add_subcommand("verify", "Check a model against a graph");
  verify->add_option("graph", path, "Graph file")->required();
  verify->add_option("model", model, "Model file")->required();
  verify->callback([&] { action = [&] { return cmd_leafroot_verify(path, model); }; });
  auto* search = leafroot->add_subcommand("search", "Bounded search for a weighted leaf root");
  search->add_option("graph", path, "Graph file")->required();
  search->add_option("--max-internal", bounds.max_internal, "Internal node bound");
  search->add_option("--max-weight", bounds.max_weight, "Edge weight bound");
  search->add_option("--max-k", bounds.max_k, "Threshold bound");
  search->add_option("--out", out, "Model output file");
  search->add_option("--dot", dot, "DOT output file for the model");
  search->callback([&] { action = [&] { return cmd_leafroot_search(path, bounds, out, dot); }; });

  cak::GenConfig gcfg;
  std::string variant, dir;
  int count = 1;
  auto* gen = app.add_subcommand("gen", "Write a seeded corpus of graphs");
  gen->add_option("variant", variant, "chordal | strongly_chordal | ptolemaic | leaf_power | planted | planted_sun")
      ->required();
  gen->add_option("--n", gcfg.n, "Vertices");
  gen->add_option("--seed", gcfg.seed, "Seed");
  gen->add_option("--out", dir, "Output directory")->required();
  gen->add_option("--count", count, "Instances");
  gen->add_option("--density", gcfg.density, "Density in [0, 1]")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--k", gcfg.k, "Leaf-power threshold");
  gen->add_option("--pattern", gcfg.pattern, "Planted pattern 1..7");
  gen->add_option("--sun-k", gcfg.sun_k, "Planted sun size");
  gen->callback([&] { action = [&] { return cmd_gen(gcfg, variant, dir, count); }; });

  int fixture_id = 1;
  std::string fixture_out = "-";
  auto* fixture = app.add_subcommand("fixture", "Write G1..G7 in the graph file format");
  fixture->add_option("id", fixture_id, "Pattern id")->required()->check(CLI::Range(1, 7));
  fixture->add_option("--out", fixture_out, "Output file ('-' for stdout)");
  fixture->callback([&] { action = [&] { return cmd_fixture(fixture_id, fixture_out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    return action();
  } catch (const cak::InvariantViolation& e) {
    std::cerr << "internal invariant violation: " << e.what() << '\n';
    return kInternalError;
  } catch (const cak::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const cak::PreconditionError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInputError;
  } catch (const cak::GenerationError& e) {
    std::cerr << "generation failed: " << e.what() << '\n';
    return kInputError;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}
