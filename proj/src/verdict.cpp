#include "cak/verdict.hpp"

#include <sstream>

namespace cak {

namespace {

std::string_view status_name(LeafRootStatus s) {
  switch (s) {
    case LeafRootStatus::found:
      return "found";
    case LeafRootStatus::exhausted:
      return "exhausted";
    case LeafRootStatus::not_strongly_chordal:
      return "not_strongly_chordal";
    case LeafRootStatus::budget_exceeded:
      return "budget_exceeded";
  }
  return "unknown";
}

}  // namespace

Verdict classify(const Graph& g, const ClassifyOptions& opts) {
  Verdict v;
  v.graph = g;
  auto c = chordality(g);
  if (auto* hole = std::get_if<HoleWitness>(&c)) {
    v.hole = *hole;
    return v;
  }
  v.chordal = true;
  v.strongly_chordal = is_strongly_chordal(g);
  v.gem = find_gem(g);
  v.ptolemaic = !v.gem;

  const auto a = build_arrangement(g);
  v.arrangement_nodes = a.node_count();
  v.arrangement_sinks = static_cast<int>(a.sinks().size());
  v.bad2cycle = find_bad_2_cycle(a);
  v.pattern = find_induced_pattern(g);
  v.certificate = non_leaf_power_certificate(g);

  if (v.strongly_chordal) {
    if (v.bad2cycle.has_value() != v.pattern.has_value()) {
      v.consistent = false;
      v.inconsistency = v.bad2cycle ? "bad 2-cycle present but no induced G1..G7"
                                    : "induced G1..G7 present but no bad 2-cycle";
    }
    if (v.bad2cycle) {
      v.obstruction = extract_obstruction(g, a, *v.bad2cycle);
      if (!verify_pattern_match(g, v.obstruction->match)) {
        v.consistent = false;
        v.inconsistency = "extracted obstruction failed verification";
      }
    }
  }

  if (opts.leafroot_max_n > 0 && g.order() <= opts.leafroot_max_n) {
    v.leafroot = search_leaf_root(g, {}, opts.budget);
    if (v.leafroot->status == LeafRootStatus::found && v.certificate) {
      v.consistent = false;
      v.inconsistency = "leaf root found for a graph with a non-leaf-power certificate";
    }
  }
  return v;
}

Json verdict_to_json(const Verdict& v) {
  const Graph& g = v.graph;
  Json j{{"vertices", g.order()},
         {"edges", g.edge_count()},
         {"chordal", v.chordal},
         {"strongly_chordal", v.strongly_chordal},
         {"ptolemaic", v.ptolemaic},
         {"consistent", v.consistent}};
  j["hole"] = v.hole ? hole_to_json(g, *v.hole) : Json();
  if (v.gem) {
    Json path = Json::array();
    for (int x : v.gem->path) path.push_back(g.label(x));
    j["gem"] = {{"center", g.label(v.gem->center)}, {"path", path}};
  } else {
    j["gem"] = nullptr;
  }
  if (v.chordal) j["arrangement"] = {{"nodes", v.arrangement_nodes}, {"sinks", v.arrangement_sinks}};
  if (v.bad2cycle) {
    // Ids are meaningful only against the arrangement the witness came from.
    j["bad2cycle"] = bad2_to_json(build_arrangement(g), *v.bad2cycle);
  } else {
    j["bad2cycle"] = nullptr;
  }
  j["pattern"] = v.pattern ? match_to_json(g, *v.pattern) : Json();
  j["obstruction"] = v.obstruction ? obstruction_to_json(g, *v.obstruction) : Json();
  j["certificate"] = v.certificate ? certificate_to_json(g, *v.certificate) : Json();
  if (v.leafroot) {
    Json lr{{"status", status_name(v.leafroot->status)}, {"visited", v.leafroot->visited}};
    lr["model"] = v.leafroot->model ? model_to_json(*v.leafroot->model) : Json();
    j["leafroot"] = lr;
  } else {
    j["leafroot"] = nullptr;
  }
  if (!v.consistent) j["inconsistency"] = v.inconsistency;
  return j;
}

std::string verdict_to_text(const Verdict& v) {
  const Graph& g = v.graph;
  std::ostringstream out;
  auto flag = [](bool b) { return b ? "yes" : "no"; };
  out << "vertices          " << g.order() << "\nedges             " << g.edge_count() << '\n';
  out << "chordal           " << flag(v.chordal) << '\n';
  if (v.hole) {
    out << "hole             ";
    for (int x : v.hole->cycle) out << ' ' << g.label(x);
    out << "\n(remaining analyses need a chordal graph)\n";
    return out.str();
  }
  out << "strongly chordal  " << flag(v.strongly_chordal) << '\n';
  out << "ptolemaic         " << flag(v.ptolemaic) << '\n';
  out << "arrangement       " << v.arrangement_nodes << " nodes, " << v.arrangement_sinks << " sinks\n";
  out << "bad 2-cycle       " << (v.bad2cycle ? "present" : "absent") << '\n';
  if (v.bad2cycle) {
    const auto a = build_arrangement(g);
    for (int i = 0; i < 2; ++i)
      out << "  S" << i << ' ' << format_set(g, a.node(v.bad2cycle->starters[i])) << "  T" << i << ' '
          << format_set(g, a.node(v.bad2cycle->terminals[i])) << '\n';
  }
  out << "pattern           ";
  if (v.pattern) {
    out << 'G' << v.pattern->pattern << '\n';
  } else {
    out << (v.strongly_chordal ? "none known" : "absent") << '\n';
  }
  if (v.obstruction) out << "obstruction       G" << v.obstruction->match.pattern << " (case " << v.obstruction->case_label << ")\n";
  out << "certificate       " << (v.certificate ? "present (not a leaf power)" : "absent") << '\n';
  if (v.leafroot) {
    out << "leaf root         " << status_name(v.leafroot->status);
    if (v.leafroot->model) out << ", k=" << v.leafroot->model->k;
    out << '\n';
  }
  if (!v.consistent) out << "INCONSISTENT      " << v.inconsistency << '\n';
  return out.str();
}

}  // namespace cak
