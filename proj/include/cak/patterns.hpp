#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "cak/graph.hpp"

namespace cak {

enum class Role { x0, x1, y00, y01, y10, y11, z00, z01, z10, z11, z0, z1 };

std::string_view role_name(Role r);

/// Vertex count of G_id: 10, 10, 10, 11, 12, 12, 12.
int pattern_order(int id);

/// Role of fixture vertex `index` in G_id. Indices 0..9 follow the Role
/// order; index 10 is z1 in G4 and z0 in G5..G7, index 11 is z1.
Role pattern_role(int id, int index);
/// Fixture index of `r` in G_id, or -1 when G_id lacks that role.
int pattern_index(int id, Role r);

/// Exact fixture for G_id, vertices labelled by role name. Throws
/// PreconditionError for id outside 1..7.
Graph pattern_graph(int id);

/// map[i] is the host vertex playing fixture vertex i of G_pattern.
struct PatternMatch {
  int pattern = 0;
  std::vector<int> map;

  int vertex(Role r) const { return map[pattern_index(pattern, r)]; }
};

/// Injective, in range, and host adjacency on the image equals the fixture.
bool verify_pattern_match(const Graph& g, const PatternMatch& m);

/// First induced copy of G_id in deterministic order.
std::optional<PatternMatch> find_induced_pattern(const Graph& g, int id);
/// First induced copy of any of G1..G7, trying patterns in id order.
std::optional<PatternMatch> find_induced_pattern(const Graph& g);
/// Calls `visit` for every induced copy of G_id until it returns false.
void for_each_induced_pattern(const Graph& g, int id, const std::function<bool(const PatternMatch&)>& visit);

/// Which of the three disjoint-path conditions holds for edges e1, e2.
/// For condition 2, `a` is adjacent to both ends of e1 (or of e2 when
/// `swapped`); for condition 3, `a` serves e1 and `b` serves e2.
struct Lemma8Witness {
  int condition = 0;
  int a = -1;
  int b = -1;
  bool swapped = false;
};

/// First condition that holds, checking 1, 2, 2-swapped, 3 and scanning
/// candidate vertices in ascending order. Throws PreconditionError when
/// the endpoints are not four distinct vertices or either pair is a non-edge.
std::optional<Lemma8Witness> lemma8_condition(const Graph& g, Edge e1, Edge e2);
bool verify_lemma8(const Graph& g, Edge e1, Edge e2, const Lemma8Witness& w);

/// Six vertices on the cycle x0 y00 y10 x1 y11 y01, stored in that order, and
/// the witnesses for the five edge pairs listed by `certificate_edge_pairs`.
struct NonLeafPowerCertificate {
  std::array<int, 6> cycle{};
  std::array<Lemma8Witness, 5> witnesses{};

  int x0() const { return cycle[0]; }
  int y00() const { return cycle[1]; }
  int y10() const { return cycle[2]; }
  int x1() const { return cycle[3]; }
  int y11() const { return cycle[4]; }
  int y01() const { return cycle[5]; }
};

/// {x0y00, x1y10}, {x0y00, x1y11}, {x0y01, x1y10}, {x0y01, x1y11}, {y00y10, y01y11}.
std::array<std::pair<Edge, Edge>, 5> certificate_edge_pairs(const std::array<int, 6>& cycle);

std::optional<NonLeafPowerCertificate> non_leaf_power_certificate(const Graph& g);
bool verify_certificate(const Graph& g, const NonLeafPowerCertificate& c);

}  // namespace cak
