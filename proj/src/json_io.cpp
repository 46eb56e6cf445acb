#include "cak/json_io.hpp"

#include <string>

#include "cak/errors.hpp"

namespace cak {

namespace {

std::string need_string(const Json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw PreconditionError(std::string("expected a vertex label for ") + what);
}

int vertex_from_json(const Graph& g, const Json& j) {
  const auto name = need_string(j, "vertex");
  int v = g.find_label(name);
  if (v >= 0) return v;
  throw PreconditionError("unknown vertex label '" + name + "'");
}

Json vertex_to_json(const Graph& g, int v) { return g.label(v); }

Json node_to_json(const CliqueArrangement& a, int id) {
  return {{"id", id}, {"vertices", set_to_json(a.graph(), a.node(id))}};
}

int node_from_json(const CliqueArrangement& a, const Json& j) {
  if (!j.is_object() || !j.contains("vertices")) throw PreconditionError("node entry needs a 'vertices' list");
  auto id = a.find(set_from_json(a.graph(), j.at("vertices")));
  if (!id) throw PreconditionError("vertex list is not an arrangement node");
  if (j.contains("id") && j.at("id") != *id) throw PreconditionError("node id disagrees with its vertex list");
  return *id;
}

Json witness_to_json(const Graph& g, const Lemma8Witness& w) {
  Json j{{"condition", w.condition}, {"swapped", w.swapped}};
  j["a"] = w.a >= 0 ? vertex_to_json(g, w.a) : Json();
  j["b"] = w.b >= 0 ? vertex_to_json(g, w.b) : Json();
  return j;
}

Lemma8Witness witness_from_json(const Graph& g, const Json& j) {
  Lemma8Witness w;
  w.condition = j.at("condition").get<int>();
  w.swapped = j.value("swapped", false);
  if (j.contains("a") && !j.at("a").is_null()) w.a = vertex_from_json(g, j.at("a"));
  if (j.contains("b") && !j.at("b").is_null()) w.b = vertex_from_json(g, j.at("b"));
  return w;
}

constexpr std::array<Role, 6> kCycleRoles = {Role::x0, Role::y00, Role::y10, Role::x1, Role::y11, Role::y01};

}  // namespace

Json set_to_json(const Graph& g, const VertexSet& s) {
  Json out = Json::array();
  for (int v : s) out.push_back(vertex_to_json(g, v));
  return out;
}

VertexSet set_from_json(const Graph& g, const Json& j) {
  if (!j.is_array()) throw PreconditionError("expected an array of vertex labels");
  VertexSet s;
  for (const auto& e : j) s.insert(vertex_from_json(g, e));
  return s;
}

Json bad2_to_json(const CliqueArrangement& a, const Bad2CycleWitness& w) {
  Json j;
  j["kind"] = "bad_2_cycle";
  for (int i = 0; i < 2; ++i) {
    j["starters"].push_back(node_to_json(a, w.starters[i]));
    j["terminals"].push_back(node_to_json(a, w.terminals[i]));
  }
  j["middle"] = node_to_json(a, w.middle);
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) j["paths"].push_back({{"from", i}, {"to", k}, {"nodes", w.paths[i][k]}});
  return j;
}

Bad2CycleWitness bad2_from_json(const CliqueArrangement& a, const Json& j) {
  try {
    Bad2CycleWitness w;
    for (int i = 0; i < 2; ++i) {
      w.starters[i] = node_from_json(a, j.at("starters").at(i));
      w.terminals[i] = node_from_json(a, j.at("terminals").at(i));
    }
    w.middle = node_from_json(a, j.at("middle"));
    for (const auto& p : j.at("paths")) {
      int i = p.at("from").get<int>(), k = p.at("to").get<int>();
      if (i < 0 || i > 1 || k < 0 || k > 1) throw PreconditionError("path endpoints must be 0 or 1");
      for (int id : p.at("nodes").get<std::vector<int>>()) {
        if (id < 0 || id >= a.node_count()) throw PreconditionError("path node id out of range");
        w.paths[i][k].push_back(id);
      }
    }
    return w;
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed bad 2-cycle JSON: ") + e.what());
  }
}

Json kcycle_to_json(const CliqueArrangement& a, const BadKCycleWitness& w) {
  Json j{{"kind", "bad_k_cycle"}, {"k", w.k}};
  j["starters"] = Json::array();
  j["terminals"] = Json::array();
  for (int id : w.starters) j["starters"].push_back(node_to_json(a, id));
  for (int id : w.terminals) j["terminals"].push_back(node_to_json(a, id));
  return j;
}

Json match_to_json(const Graph& g, const PatternMatch& m) {
  Json roles = Json::object();
  for (int i = 0; i < static_cast<int>(m.map.size()); ++i)
    roles[std::string(role_name(pattern_role(m.pattern, i)))] = vertex_to_json(g, m.map[i]);
  return {{"kind", "pattern"}, {"pattern", m.pattern}, {"roles", roles}};
}

PatternMatch match_from_json(const Graph& g, const Json& j) {
  try {
    PatternMatch m;
    m.pattern = j.at("pattern").get<int>();
    if (m.pattern < 1 || m.pattern > 7) throw PreconditionError("pattern id must be 1..7");
    const int order = pattern_order(m.pattern);
    m.map.assign(order, -1);
    for (int i = 0; i < order; ++i)
      m.map[i] = vertex_from_json(g, j.at("roles").at(std::string(role_name(pattern_role(m.pattern, i)))));
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed pattern JSON: ") + e.what());
  }
}

Json obstruction_to_json(const Graph& g, const Obstruction& o) {
  Json j = match_to_json(g, o.match);
  j["kind"] = "obstruction";
  j["case"] = o.case_label;
  return j;
}

Json certificate_to_json(const Graph& g, const NonLeafPowerCertificate& c) {
  Json cycle = Json::object();
  for (int i = 0; i < 6; ++i) cycle[std::string(role_name(kCycleRoles[i]))] = vertex_to_json(g, c.cycle[i]);
  Json ws = Json::array();
  for (const auto& w : c.witnesses) ws.push_back(witness_to_json(g, w));
  return {{"kind", "certificate"}, {"cycle", cycle}, {"witnesses", ws}};
}

NonLeafPowerCertificate certificate_from_json(const Graph& g, const Json& j) {
  try {
    NonLeafPowerCertificate c;
    for (int i = 0; i < 6; ++i) c.cycle[i] = vertex_from_json(g, j.at("cycle").at(std::string(role_name(kCycleRoles[i]))));
    if (j.at("witnesses").size() != 5) throw PreconditionError("a certificate has five witnesses");
    for (int i = 0; i < 5; ++i) c.witnesses[i] = witness_from_json(g, j.at("witnesses").at(i));
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed certificate JSON: ") + e.what());
  }
}

Json sun_to_json(const Graph& g, const SunWitness& w) {
  Json hub = Json::array(), rim = Json::array();
  for (int v : w.hub) hub.push_back(vertex_to_json(g, v));
  for (int v : w.rim) rim.push_back(vertex_to_json(g, v));
  return {{"kind", "sun"}, {"k", w.k}, {"hub", hub}, {"rim", rim}};
}

Json hole_to_json(const Graph& g, const HoleWitness& w) {
  Json cycle = Json::array();
  for (int v : w.cycle) cycle.push_back(vertex_to_json(g, v));
  return {{"kind", "hole"}, {"cycle", cycle}};
}

Json model_to_json(const LeafRootModel& m) {
  Json edges = Json::array();
  for (const auto& e : m.edges) edges.push_back({e.p, e.q, e.weight});
  return {{"kind", "leaf_root"}, {"nodes", m.nodes}, {"k", m.k}, {"edges", edges}, {"leaf_of", m.leaf_of}};
}

LeafRootModel model_from_json(const Json& j) {
  try {
    LeafRootModel m;
    m.nodes = j.at("nodes").get<int>();
    m.k = j.at("k").get<int>();
    for (const auto& e : j.at("edges")) m.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()});
    m.leaf_of = j.at("leaf_of").get<std::vector<int>>();
    validate_model(m, static_cast<int>(m.leaf_of.size()));
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed model JSON: ") + e.what());
  }
}

}  // namespace cak
