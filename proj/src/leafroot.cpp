#include "cak/leafroot.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include "cak/chordal.hpp"

namespace cak {

void validate_model(const LeafRootModel& m, int vertex_count) {
  auto bad = [](const std::string& what) { throw PreconditionError("malformed model: " + what); };
  if (m.nodes < 1) bad("no tree nodes");
  if (m.k < 1) bad("threshold below 1");
  if (static_cast<int>(m.edges.size()) != m.nodes - 1) bad("a tree on t nodes has t-1 edges");
  std::vector<int> parent(m.nodes), degree(m.nodes, 0);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
  for (const auto& e : m.edges) {
    if (e.p < 0 || e.q < 0 || e.p >= m.nodes || e.q >= m.nodes) bad("edge endpoint out of range");
    if (e.weight < 1) bad("weight below 1");
    int a = root(e.p), b = root(e.q);
    if (a == b) bad("cycle through nodes " + std::to_string(e.p) + " and " + std::to_string(e.q));
    parent[a] = b;
    ++degree[e.p];
    ++degree[e.q];
  }
  if (static_cast<int>(m.leaf_of.size()) != vertex_count) bad("leaf map does not cover the vertex set");
  std::vector<char> carried(m.nodes, 0);
  for (int node : m.leaf_of) {
    if (node < 0 || node >= m.nodes) bad("leaf map points outside the tree");
    if (carried[node]) bad("two vertices share tree node " + std::to_string(node));
    carried[node] = 1;
  }
  for (int x = 0; x < m.nodes; ++x) {
    bool leaf = degree[x] <= 1;
    if (leaf != static_cast<bool>(carried[x]))
      bad(leaf ? "tree leaf " + std::to_string(x) + " carries no vertex"
               : "vertex placed on internal node " + std::to_string(x));
  }
}

std::vector<std::vector<long long>> leaf_distances(const LeafRootModel& m) {
  std::vector<std::vector<std::pair<int, int>>> adj(m.nodes);
  for (const auto& e : m.edges) {
    adj[e.p].push_back({e.q, e.weight});
    adj[e.q].push_back({e.p, e.weight});
  }
  const int n = static_cast<int>(m.leaf_of.size());
  std::vector<std::vector<long long>> out(n, std::vector<long long>(n, 0));
  std::vector<long long> dist(m.nodes);
  for (int u = 0; u < n; ++u) {
    std::fill(dist.begin(), dist.end(), -1);
    std::vector<int> stack{m.leaf_of[u]};
    dist[m.leaf_of[u]] = 0;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (auto [y, w] : adj[x])
        if (dist[y] < 0) {
          dist[y] = dist[x] + w;
          stack.push_back(y);
        }
    }
    for (int v = 0; v < n; ++v) out[u][v] = dist[m.leaf_of[v]];
  }
  return out;
}

std::optional<LeafRootViolation> verify_leaf_root(const Graph& g, const LeafRootModel& m) {
  validate_model(m, g.order());
  auto d = leaf_distances(m);
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v) {
      bool edge = g.adjacent(u, v);
      if (edge != (d[u][v] <= m.k)) return LeafRootViolation{u, v, d[u][v], edge};
    }
  return std::nullopt;
}

Graph leaf_power_graph(const LeafRootModel& m) {
  const int n = static_cast<int>(m.leaf_of.size());
  validate_model(m, n);
  auto d = leaf_distances(m);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (d[u][v] <= m.k) edges.push_back({u, v});
  return Graph(n, edges);
}

LeafRootModel expand_model(const LeafRootModel& m) {
  LeafRootModel out{m.nodes, m.k, {}, m.leaf_of};
  for (const auto& e : m.edges) {
    int prev = e.p;
    for (int s = 1; s < e.weight; ++s) {
      int mid = out.nodes++;
      out.edges.push_back({prev, mid, 1});
      prev = mid;
    }
    out.edges.push_back({prev, e.q, 1});
  }
  return out;
}

LeafRootModel scale_model(const LeafRootModel& m, int factor) {
  if (factor < 1) throw PreconditionError("scale factor below 1");
  LeafRootModel out = m;
  out.k *= factor;
  for (auto& e : out.edges) e.weight *= factor;
  return out;
}

namespace {

/// Leaves are nodes 0..n-1, internal nodes n, n+1, ...
struct Topology {
  int n = 0;
  int internal = 0;
  std::vector<std::pair<int, int>> edges;
};

class Search {
 public:
  Search(const Graph& g, const LeafRootBounds& b, std::uint64_t budget) : g_(g), b_(b), budget_(budget) {}

  std::optional<LeafRootModel> run() {
    const int n = g_.order();
    if (n == 1) return LeafRootModel{1, 2, {}, {0}};
    collect(n);
    if (exceeded_) return std::nullopt;
    for (int k = 2; k <= b_.max_k; ++k)
      for (const auto& t : topologies_) {
        if (auto w = weights(t, k)) {
          LeafRootModel m{n + t.internal, k, {}, {}};
          for (std::size_t e = 0; e < t.edges.size(); ++e)
            m.edges.push_back({t.edges[e].first, t.edges[e].second, (*w)[e]});
          m.leaf_of.resize(n);
          std::iota(m.leaf_of.begin(), m.leaf_of.end(), 0);
          return m;
        }
        if (exceeded_) return std::nullopt;
      }
    return std::nullopt;
  }

  bool exceeded() const { return exceeded_; }
  std::uint64_t visited() const { return visited_; }

 private:
  bool tick() {
    if (++visited_ > budget_) exceeded_ = true;
    return !exceeded_;
  }

  void collect(int n) {
    Topology t;
    t.n = n;
    t.internal = 1;
    const int c = n;
    t.edges = {{0, c}, {1, c}};
    if (n == 2) {
      topologies_.push_back(t);
      return;
    }
    t.edges.push_back({2, c});
    insert(t, 3);
  }

  // Each leaf-labelled tree with internal degree >= 3 arises exactly once:
  // leaf i either subdivides an edge or joins an existing internal node.
  void insert(Topology& t, int leaf) {
    if (exceeded_ || !tick()) return;
    if (leaf == t.n) {
      topologies_.push_back(t);
      return;
    }
    const int edge_count = static_cast<int>(t.edges.size());
    if (t.internal < b_.max_internal) {
      for (int e = 0; e < edge_count; ++e) {
        auto saved = t.edges[e];
        int x = t.n + t.internal;
        ++t.internal;
        t.edges[e] = {saved.first, x};
        t.edges.push_back({x, saved.second});
        t.edges.push_back({leaf, x});
        insert(t, leaf + 1);
        t.edges.pop_back();
        t.edges.pop_back();
        t.edges[e] = saved;
        --t.internal;
      }
    }
    for (int c = t.n; c < t.n + t.internal; ++c) {
      t.edges.push_back({leaf, c});
      insert(t, leaf + 1);
      t.edges.pop_back();
    }
  }

  std::optional<std::vector<int>> weights(const Topology& t, int k) {
    const int n = t.n;
    const int m = static_cast<int>(t.edges.size());
    const int max_w = std::min(b_.max_weight, k);
    // Edge masks from each node to leaf 0.
    std::vector<std::vector<std::pair<int, int>>> adj(n + t.internal);
    for (int e = 0; e < m; ++e) {
      adj[t.edges[e].first].push_back({t.edges[e].second, e});
      adj[t.edges[e].second].push_back({t.edges[e].first, e});
    }
    std::vector<std::uint64_t> to_root(n + t.internal, 0);
    std::vector<char> seen(n + t.internal, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (auto [y, e] : adj[x])
        if (!seen[y]) {
          seen[y] = 1;
          to_root[y] = to_root[x] | (std::uint64_t{1} << e);
          stack.push_back(y);
        }
    }
    struct Pair {
      std::uint64_t mask;
      bool edge;
    };
    std::vector<Pair> pairs;
    std::vector<std::vector<int>> through(m);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        auto mask = to_root[u] ^ to_root[v];
        for (int e = 0; e < m; ++e)
          if (mask >> e & 1) through[e].push_back(static_cast<int>(pairs.size()));
        pairs.push_back({mask, g_.adjacent(u, v)});
      }
    // Quick reject: an adjacent pair whose path is already too long at weight 1.
    for (const auto& p : pairs)
      if (p.edge && std::popcount(p.mask) > k) return std::nullopt;

    std::vector<int> w(m, 0);
    std::vector<long long> sum(pairs.size(), 0);
    std::vector<int> left(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) left[i] = std::popcount(pairs[i].mask);

    std::function<bool(int)> assign = [&](int e) -> bool {
      if (e == m) return true;
      for (int x = 1; x <= max_w; ++x) {
        if (!tick()) return false;
        bool ok = true, stop = false;
        for (int pi : through[e]) {
          long long s = sum[pi] + x;
          int rest = left[pi] - 1;
          if (pairs[pi].edge) {
            if (s + rest > k) ok = false, stop = true;
          } else if (s + static_cast<long long>(rest) * max_w <= k) {
            ok = false;
          }
        }
        if (stop) break;
        if (!ok) continue;
        for (int pi : through[e]) sum[pi] += x, --left[pi];
        w[e] = x;
        if (assign(e + 1)) return true;
        for (int pi : through[e]) sum[pi] -= x, ++left[pi];
        if (exceeded_) return false;
      }
      return false;
    };
    if (assign(0)) return w;
    return std::nullopt;
  }

  const Graph& g_;
  LeafRootBounds b_;
  std::uint64_t budget_;
  std::uint64_t visited_ = 0;
  bool exceeded_ = false;
  std::vector<Topology> topologies_;
};

}  // namespace

LeafRootSearch search_leaf_root(const Graph& g, LeafRootBounds bounds, std::uint64_t budget) {
  const int n = g.order();
  if (n == 0) throw PreconditionError("search_leaf_root: empty graph");
  if (bounds.max_k < 0) bounds.max_k = std::max(2, 2 * n);
  if (bounds.max_weight < 0) bounds.max_weight = bounds.max_k;
  if (bounds.max_internal < 0) bounds.max_internal = std::max(1, n - 2);
  LeafRootSearch out;
  out.bounds = bounds;
  if (!is_strongly_chordal(g)) {
    out.status = LeafRootStatus::not_strongly_chordal;
    return out;
  }

  std::vector<LeafRootModel> parts;
  std::vector<std::vector<int>> hosts;
  for (const auto& comp : connected_components(g)) {
    auto sub = induced_subgraph(g, comp);
    if (sub.graph.order() > 16) throw PreconditionError("search_leaf_root: component too large for exhaustive search");
    Search s(sub.graph, bounds, budget - std::min(budget, out.visited));
    auto m = s.run();
    out.visited += s.visited();
    if (!m) {
      out.status = s.exceeded() ? LeafRootStatus::budget_exceeded : LeafRootStatus::exhausted;
      return out;
    }
    parts.push_back(std::move(*m));
    hosts.push_back(sub.to_host);
  }

  LeafRootModel model;
  if (parts.size() == 1) {
    model = parts[0];
    std::vector<int> leaf_of(n);
    for (std::size_t v = 0; v < hosts[0].size(); ++v) leaf_of[hosts[0][v]] = model.leaf_of[v];
    model.leaf_of = std::move(leaf_of);
  } else {
    int big_k = 1;
    for (const auto& p : parts) big_k = std::lcm(big_k, p.k);
    model.k = big_k;
    model.leaf_of.assign(n, -1);
    const int hub = 0;
    model.nodes = 1;
    for (std::size_t c = 0; c < parts.size(); ++c) {
      auto p = scale_model(parts[c], big_k / parts[c].k);
      const int offset = model.nodes;
      for (const auto& e : p.edges) model.edges.push_back({e.p + offset, e.q + offset, e.weight});
      for (std::size_t v = 0; v < hosts[c].size(); ++v) model.leaf_of[hosts[c][v]] = p.leaf_of[v] + offset;
      // Attach through an internal node when the part has one.
      int anchor = p.leaf_of[0];
      if (p.nodes > 1) {
        std::vector<char> is_leaf(p.nodes, 0);
        for (int x : p.leaf_of) is_leaf[x] = 1;
        for (int x = 0; x < p.nodes; ++x)
          if (!is_leaf[x]) {
            anchor = x;
            break;
          }
      }
      model.edges.push_back({hub, anchor + offset, big_k});
      model.nodes += p.nodes;
    }
  }
  if (verify_leaf_root(g, model)) throw InvariantViolation("leaf-root-search", "assembled model fails verification");
  out.status = LeafRootStatus::found;
  out.model = std::move(model);
  return out;
}

namespace {

std::vector<std::string> tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int to_int(const std::string& s, int line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + s + "'");
  }
}

}  // namespace

LeafRootModel parse_model(std::string_view text) {
  LeafRootModel m;
  bool header = false;
  std::vector<std::pair<int, int>> leaves;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto t = tokens(line);
    if (t.empty() || t[0][0] == '#') continue;
    if (!header) {
      if (t.size() != 2) throw ParseError(line_no, "malformed header: expected \"t k\"");
      m.nodes = to_int(t[0], line_no);
      m.k = to_int(t[1], line_no);
      header = true;
    } else if (static_cast<int>(m.edges.size()) < m.nodes - 1) {
      if (t.size() != 3) throw ParseError(line_no, "expected tree edge \"p q w\"");
      m.edges.push_back({to_int(t[0], line_no), to_int(t[1], line_no), to_int(t[2], line_no)});
    } else {
      if (t.size() != 2) throw ParseError(line_no, "expected leaf line \"treenode vertex\"");
      leaves.push_back({to_int(t[0], line_no), to_int(t[1], line_no)});
    }
  }
  if (!header) throw ParseError(line_no, "malformed header: missing \"t k\" line");
  if (static_cast<int>(m.edges.size()) != std::max(0, m.nodes - 1))
    throw ParseError(line_no, "expected " + std::to_string(m.nodes - 1) + " tree edges");
  const int n = static_cast<int>(leaves.size());
  m.leaf_of.assign(n, -1);
  for (auto [node, v] : leaves) {
    if (v < 0 || v >= n) throw ParseError(0, "graph vertex " + std::to_string(v) + " out of range");
    if (m.leaf_of[v] >= 0) throw ParseError(0, "graph vertex " + std::to_string(v) + " mapped twice");
    m.leaf_of[v] = node;
  }
  validate_model(m, n);
  return m;
}

LeafRootModel read_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_model(ss.str());
}

std::string serialize_model(const LeafRootModel& m) {
  std::ostringstream out;
  out << m.nodes << ' ' << m.k << '\n';
  for (const auto& e : m.edges) out << e.p << ' ' << e.q << ' ' << e.weight << '\n';
  for (std::size_t v = 0; v < m.leaf_of.size(); ++v) out << m.leaf_of[v] << ' ' << v << '\n';
  return out.str();
}

std::string model_to_dot(const LeafRootModel& m, const Graph* g) {
  std::vector<int> vertex_at(m.nodes, -1);
  for (std::size_t v = 0; v < m.leaf_of.size(); ++v) vertex_at[m.leaf_of[v]] = static_cast<int>(v);
  std::ostringstream out;
  out << "graph leafroot {\n  label=\"k = " << m.k << "\";\n";
  for (int x = 0; x < m.nodes; ++x) {
    if (vertex_at[x] >= 0) {
      std::string name = g ? g->label(vertex_at[x]) : std::to_string(vertex_at[x]);
      out << "  t" << x << " [shape=box, label=\"" << name << "\"];\n";
    } else {
      out << "  t" << x << " [shape=point];\n";
    }
  }
  for (const auto& e : m.edges) out << "  t" << e.p << " -- t" << e.q << " [label=\"" << e.weight << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace cak
