#include "cak/patterns.hpp"

#include <algorithm>

#include "cak/errors.hpp"

namespace cak {

namespace {

constexpr std::array<std::string_view, 12> kRoleNames = {"x0",  "x1",  "y00", "y01", "y10", "y11",
                                                         "z00", "z01", "z10", "z11", "z0",  "z1"};

void check_id(int id) {
  if (id < 1 || id > 7) throw PreconditionError("pattern id " + std::to_string(id) + " outside 1..7");
}

}  // namespace

std::string_view role_name(Role r) { return kRoleNames[static_cast<int>(r)]; }

int pattern_order(int id) {
  check_id(id);
  return id <= 3 ? 10 : id == 4 ? 11 : 12;
}

Role pattern_role(int id, int index) {
  if (index < 0 || index >= pattern_order(id)) throw PreconditionError("fixture index out of range");
  if (index < 10) return static_cast<Role>(index);
  if (id == 4 || index == 11) return Role::z1;
  return Role::z0;
}

int pattern_index(int id, Role r) {
  int ri = static_cast<int>(r);
  if (ri < 10) return ri;
  if (id < 4) return -1;
  if (id == 4) return r == Role::z1 ? 10 : -1;
  return ri;
}

Graph pattern_graph(int id) {
  const int n = pattern_order(id);
  auto at = [&](Role r) { return pattern_index(id, r); };
  using R = Role;
  std::vector<Edge> edges;
  auto clique = [&](std::initializer_list<Role> rs) {
    std::vector<Role> v(rs);
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j) {
        Edge e{at(v[i]), at(v[j])};
        if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
      }
  };
  clique({R::x0, R::x1, R::y00, R::y10});
  clique({R::x0, R::x1, R::y01, R::y11});
  clique({R::z00, R::x0, R::y00});
  clique({R::z01, R::x0, R::y01});
  clique({R::z10, R::x1, R::y10});
  clique({R::z11, R::x1, R::y11});
  auto chord = [&](Role a, Role b) { edges.push_back({at(a), at(b)}); };
  switch (id) {
    case 2:
      chord(R::y00, R::y01);
      break;
    case 3:
      chord(R::y00, R::y11);
      break;
    case 4:
      chord(R::y00, R::y01);
      chord(R::y00, R::y11);
      break;
    case 5:
      chord(R::y00, R::y01);
      chord(R::y00, R::y11);
      chord(R::y10, R::y11);
      break;
    case 6:
      chord(R::y00, R::y01);
      chord(R::y00, R::y11);
      chord(R::y01, R::y10);
      break;
    case 7:
      chord(R::y00, R::y01);
      chord(R::y00, R::y11);
      chord(R::y01, R::y10);
      chord(R::y10, R::y11);
      break;
    default:
      break;
  }
  if (id >= 5) clique({R::z0, R::x0, R::x1}), chord(R::z0, R::y00), chord(R::z0, R::y10);
  if (id >= 4) clique({R::z1, R::x0, R::x1}), chord(R::z1, R::y01), chord(R::z1, R::y11);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.emplace_back(role_name(pattern_role(id, i)));
  return Graph(n, edges, std::move(labels));
}

bool verify_pattern_match(const Graph& g, const PatternMatch& m) {
  if (m.pattern < 1 || m.pattern > 7) return false;
  const auto p = pattern_graph(m.pattern);
  if (static_cast<int>(m.map.size()) != p.order()) return false;
  VertexSet image;
  for (int v : m.map) {
    if (v < 0 || v >= g.order() || image.contains(v)) return false;
    image.insert(v);
  }
  for (int i = 0; i < p.order(); ++i)
    for (int j = i + 1; j < p.order(); ++j)
      if (p.adjacent(i, j) != g.adjacent(m.map[i], m.map[j])) return false;
  return true;
}

namespace {

class Matcher {
 public:
  Matcher(const Graph& g, int id, const std::function<bool(const PatternMatch&)>& visit)
      : g_(g), p_(pattern_graph(id)), visit_(visit) {
    match_.pattern = id;
    match_.map.assign(p_.order(), -1);
    // Every vertex after the first has an earlier neighbour in this order.
    for (Role r : {Role::x0, Role::x1, Role::y00, Role::y10, Role::y01, Role::y11, Role::z00, Role::z01,
                   Role::z10, Role::z11, Role::z0, Role::z1}) {
      int i = pattern_index(id, r);
      if (i >= 0) order_.push_back(i);
    }
  }

  void run() {
    if (g_.order() >= p_.order()) extend(0);
  }

 private:
  bool extend(std::size_t step) {
    if (step == order_.size()) return visit_(match_);
    const int p = order_[step];
    VertexSet cand = g_.vertices() - used_;
    for (std::size_t s = 0; s < step; ++s) {
      int q = order_[s];
      if (p_.adjacent(p, q))
        cand &= g_.neighbors(match_.map[q]);
      else
        cand -= g_.neighbors(match_.map[q]);
    }
    const int need = p_.degree(p);
    for (int v : cand) {
      if (g_.degree(v) < need) continue;
      match_.map[p] = v;
      used_.insert(v);
      bool more = extend(step + 1);
      used_.erase(v);
      if (!more) return false;
    }
    match_.map[p] = -1;
    return true;
  }

  const Graph& g_;
  Graph p_;
  const std::function<bool(const PatternMatch&)>& visit_;
  std::vector<int> order_;
  PatternMatch match_;
  VertexSet used_;
};

}  // namespace

void for_each_induced_pattern(const Graph& g, int id, const std::function<bool(const PatternMatch&)>& visit) {
  check_id(id);
  Matcher(g, id, visit).run();
}

std::optional<PatternMatch> find_induced_pattern(const Graph& g, int id) {
  std::optional<PatternMatch> out;
  for_each_induced_pattern(g, id, [&](const PatternMatch& m) {
    out = m;
    return false;
  });
  return out;
}

std::optional<PatternMatch> find_induced_pattern(const Graph& g) {
  for (int id = 1; id <= 7; ++id)
    if (auto m = find_induced_pattern(g, id)) return m;
  return std::nullopt;
}

namespace {

void check_edge_pair(const Graph& g, Edge e1, Edge e2) {
  VertexSet ends{e1.u, e1.v, e2.u, e2.v};
  for (int v : {e1.u, e1.v, e2.u, e2.v})
    if (v < 0 || v >= g.order()) throw PreconditionError("lemma8: vertex out of range");
  if (ends.size() != 4) throw PreconditionError("lemma8: edges share an endpoint");
  if (!g.adjacent(e1.u, e1.v) || !g.adjacent(e2.u, e2.v)) throw PreconditionError("lemma8: not an edge");
}

int cross_edges(const Graph& g, Edge e1, Edge e2) {
  return g.adjacent(e1.u, e2.u) + g.adjacent(e1.u, e2.v) + g.adjacent(e1.v, e2.u) + g.adjacent(e1.v, e2.v);
}

bool condition2(const Graph& g, Edge e1, Edge e2, int a) {
  if (a < 0 || a >= g.order()) return false;
  VertexSet far{e2.u, e2.v};
  auto na = g.neighbors(a);
  return na.contains(e1.u) && na.contains(e1.v) && !neighborhood(g, a, true).intersects(far) &&
         (g.neighbors(e1.u) & far).size() <= 1 && (g.neighbors(e1.v) & far).size() <= 1;
}

bool condition3(const Graph& g, Edge e1, Edge e2, int a, int b) {
  if (a < 0 || b < 0 || a >= g.order() || b >= g.order() || a == b) return false;
  auto only_a = g.neighbors(a) - neighborhood(g, b, true);
  auto only_b = g.neighbors(b) - neighborhood(g, a, true);
  return only_a.contains(e1.u) && only_a.contains(e1.v) && only_b.contains(e2.u) && only_b.contains(e2.v);
}

}  // namespace

std::optional<Lemma8Witness> lemma8_condition(const Graph& g, Edge e1, Edge e2) {
  check_edge_pair(g, e1, e2);
  if (cross_edges(g, e1, e2) <= 1) return Lemma8Witness{1};
  for (bool swapped : {false, true}) {
    Edge near = swapped ? e2 : e1, far = swapped ? e1 : e2;
    for (int a : g.neighbors(near.u) & g.neighbors(near.v))
      if (condition2(g, near, far, a)) return Lemma8Witness{2, a, -1, swapped};
  }
  for (int a : g.neighbors(e1.u) & g.neighbors(e1.v))
    for (int b : g.neighbors(e2.u) & g.neighbors(e2.v))
      if (condition3(g, e1, e2, a, b)) return Lemma8Witness{3, a, b, false};
  return std::nullopt;
}

bool verify_lemma8(const Graph& g, Edge e1, Edge e2, const Lemma8Witness& w) {
  try {
    check_edge_pair(g, e1, e2);
  } catch (const PreconditionError&) {
    return false;
  }
  switch (w.condition) {
    case 1:
      return cross_edges(g, e1, e2) <= 1;
    case 2:
      return w.swapped ? condition2(g, e2, e1, w.a) : condition2(g, e1, e2, w.a);
    case 3:
      return condition3(g, e1, e2, w.a, w.b);
    default:
      return false;
  }
}

std::array<std::pair<Edge, Edge>, 5> certificate_edge_pairs(const std::array<int, 6>& c) {
  const int x0 = c[0], y00 = c[1], y10 = c[2], x1 = c[3], y11 = c[4], y01 = c[5];
  return {{{{x0, y00}, {x1, y10}},
           {{x0, y00}, {x1, y11}},
           {{x0, y01}, {x1, y10}},
           {{x0, y01}, {x1, y11}},
           {{y00, y10}, {y01, y11}}}};
}

std::optional<NonLeafPowerCertificate> non_leaf_power_certificate(const Graph& g) {
  NonLeafPowerCertificate cert;
  auto& c = cert.cycle;
  auto& w = cert.witnesses;
  auto holds = [&](int pair_index, Edge e1, Edge e2) {
    auto r = lemma8_condition(g, e1, e2);
    if (r) w[pair_index] = *r;
    return r.has_value();
  };
  for (int x0 = 0; x0 < g.order(); ++x0)
    for (int y00 : g.neighbors(x0))
      for (int y10 : g.neighbors(y00) - VertexSet{x0})
        for (int x1 : g.neighbors(y10) - VertexSet{x0, y00}) {
          if (!holds(0, {x0, y00}, {x1, y10})) continue;
          for (int y11 : g.neighbors(x1) - VertexSet{x0, y00, y10}) {
            if (!holds(1, {x0, y00}, {x1, y11})) continue;
            for (int y01 : (g.neighbors(y11) & g.neighbors(x0)) - VertexSet{y00, y10, x1}) {
              if (!holds(2, {x0, y01}, {x1, y10}) || !holds(3, {x0, y01}, {x1, y11}) ||
                  !holds(4, {y00, y10}, {y01, y11}))
                continue;
              c = {x0, y00, y10, x1, y11, y01};
              return cert;
            }
          }
        }
  return std::nullopt;
}

bool verify_certificate(const Graph& g, const NonLeafPowerCertificate& c) {
  VertexSet seen;
  for (int v : c.cycle) {
    if (v < 0 || v >= g.order() || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (int i = 0; i < 6; ++i)
    if (!g.adjacent(c.cycle[i], c.cycle[(i + 1) % 6])) return false;
  auto pairs = certificate_edge_pairs(c.cycle);
  for (int i = 0; i < 5; ++i)
    if (!verify_lemma8(g, pairs[i].first, pairs[i].second, c.witnesses[i])) return false;
  return true;
}

}  // namespace cak
