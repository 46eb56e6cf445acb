#include "cak/dot.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cak {

namespace {

// Characters with meaning inside record labels.
std::string escape_record(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (std::string_view("{}|<>\"\\ ").find(c) != std::string_view::npos) out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

DotHighlight highlight_of(const Bad2CycleWitness& w) {
  DotHighlight h;
  for (int i = 0; i < 2; ++i) {
    h.nodes.push_back(w.starters[i]);
    h.nodes.push_back(w.terminals[i]);
  }
  for (const auto& row : w.paths)
    for (const auto& path : row)
      for (std::size_t i = 0; i + 1 < path.size(); ++i) h.arcs.emplace_back(path[i], path[i + 1]);
  return h;
}

std::string arrangement_to_dot(const CliqueArrangement& a, const DotHighlight& highlight) {
  const std::set<int> bold_nodes(highlight.nodes.begin(), highlight.nodes.end());
  const std::set<std::pair<int, int>> bold_arcs(highlight.arcs.begin(), highlight.arcs.end());
  const Graph& g = a.graph();
  std::ostringstream out;
  out << "digraph arrangement {\n  rankdir=BT;\n  node [shape=record, fontname=\"Helvetica\"];\n";
  for (int id = 0; id < a.node_count(); ++id) {
    std::string members;
    for (int v : a.node(id)) {
      if (!members.empty()) members += "\\ ";
      members += escape_record(g.label(v));
    }
    out << "  n" << id << " [label=\"{" << id << "|" << members << "}\"";
    if (a.is_sink(id)) out << ", peripheries=2";
    if (bold_nodes.count(id)) out << ", style=bold, penwidth=2.5";
    out << "];\n";
  }
  for (auto [x, y] : a.arcs()) {
    out << "  n" << x << " -> n" << y;
    if (bold_arcs.count({x, y})) out << " [style=bold, penwidth=2.5]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace cak
