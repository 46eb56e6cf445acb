#include "cak/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "cak/errors.hpp"

namespace cak {

Graph::Graph(int n, std::span<const Edge> edges, std::vector<std::string> labels)
    : n_(n), adjacency_(n), labels_(std::move(labels)) {
  if (n < 0 || n > VertexSet::kCapacity)
    throw PreconditionError("vertex count " + std::to_string(n) + " outside 0.." +
                            std::to_string(VertexSet::kCapacity));
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
    throw PreconditionError("label count does not match vertex count");
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw PreconditionError("edge endpoint out of range");
    if (e.u == e.v) throw PreconditionError("self-loop at vertex " + std::to_string(e.u));
    if (adjacency_[e.u].contains(e.v))
      throw PreconditionError("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    adjacency_[e.u].insert(e.v);
    adjacency_[e.v].insert(e.u);
    ++m_;
  }
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adjacency_[u])
      if (u < v) out.push_back({u, v});
  return out;
}

std::string Graph::label(int v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

int Graph::find_label(std::string_view name) const {
  for (int v = 0; v < n_; ++v)
    if (label(v) == name) return v;
  return -1;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view tok, int line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  int n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  std::vector<VertexSet> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto toks = split_ws(line);
    if (toks.empty() || toks.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (toks.size() != 2) throw ParseError(line_no, "expected two integers");
    auto a = to_int(toks[0], line_no);
    auto b = to_int(toks[1], line_no);
    if (n < 0) {
      if (a < 0 || a > VertexSet::kCapacity)
        throw ParseError(line_no, "malformed header: vertex count out of range");
      if (b < 0 || b > a * (a - 1) / 2) throw ParseError(line_no, "malformed header: bad edge count");
      n = static_cast<int>(a);
      m = b;
      seen.assign(n, VertexSet{});
    } else {
      if (static_cast<long long>(edges.size()) >= m)
        throw ParseError(line_no, "more edge lines than declared");
      if (a < 0 || b < 0 || a >= n || b >= n) throw ParseError(line_no, "vertex index out of range");
      if (a == b) throw ParseError(line_no, "self-loop");
      int u = static_cast<int>(a), v = static_cast<int>(b);
      if (seen[u].contains(v)) throw ParseError(line_no, "duplicate edge");
      seen[u].insert(v);
      seen[v].insert(u);
      edges.push_back({u, v});
    }
    if (end == text.size()) break;
  }
  if (n < 0) throw ParseError(line_no, "malformed header: missing \"n m\" line");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  return Graph(n, edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

void write_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << serialize_graph(g);
}

VertexSet neighborhood(const Graph& g, int v, bool closed) {
  auto s = g.neighbors(v);
  if (closed) s.insert(v);
  return s;
}

VertexSet InducedSubgraph::lift(const VertexSet& s) const {
  VertexSet out;
  for (int v : s) out.insert(to_host[v]);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw PreconditionError("induced_subgraph: empty vertex set");
  InducedSubgraph out;
  out.to_host = s.members();
  if (out.to_host.back() >= g.order()) throw PreconditionError("induced_subgraph: vertex out of range");
  std::vector<int> local(g.order(), -1);
  for (int i = 0; i < static_cast<int>(out.to_host.size()); ++i) local[out.to_host[i]] = i;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (int i = 0; i < static_cast<int>(out.to_host.size()); ++i) {
    int u = out.to_host[i];
    if (!g.labels().empty()) labels.push_back(g.label(u));
    for (int w : g.neighbors(u) & s)
      if (u < w) edges.push_back({i, local[w]});
  }
  out.graph = Graph(static_cast<int>(out.to_host.size()), edges, std::move(labels));
  return out;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  for (int v : s) {
    auto rest = s;
    rest.erase(v);
    if (!rest.is_subset_of(g.neighbors(v))) return false;
  }
  return true;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (int v : s)
    if (g.neighbors(v).intersects(s)) return false;
  return true;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    VertexSet comp, frontier;
    frontier.insert(unseen.first());
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      frontier = next - comp;
    }
    unseen -= comp;
    out.push_back(comp);
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

Graph permute(const Graph& g, std::span<const int> perm) {
  std::vector<Edge> edges;
  for (auto e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  std::vector<std::string> labels;
  if (!g.labels().empty()) {
    labels.resize(g.order());
    for (int v = 0; v < g.order(); ++v) labels[perm[v]] = g.label(v);
  }
  return Graph(g.order(), edges, std::move(labels));
}

std::string format_set(const Graph& g, const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first) out += ",";
    out += g.label(v);
    first = false;
  }
  return out + "}";
}

}  // namespace cak
