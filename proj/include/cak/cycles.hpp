#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cak/arrangement.hpp"
#include "cak/errors.hpp"
#include "cak/patterns.hpp"

namespace cak {

/// Starters and terminals as node ids; starter i reaches exactly terminals
/// i and i-1 (mod k).
struct BadKCycleWitness {
  int k = 0;
  std::vector<int> starters;
  std::vector<int> terminals;
};

/// Starters S0, S1, terminals T0, T1, the node T = T0 ∩ T1, and Hasse
/// paths paths[i][j] from Si to Tj avoiding every X with S0 ∪ S1 ⊆ X ⊆ T.
struct Bad2CycleWitness {
  std::array<int, 2> starters{-1, -1};
  std::array<int, 2> terminals{-1, -1};
  int middle = -1;
  std::array<std::array<std::vector<int>, 2>, 2> paths;
};

/// Extremal bad 2-cycle: least |T0|+|T1|, then greatest |S0|+|S1|, then
/// smallest (T0, T1, S0, S1) ids with T0 < T1 and S0 < S1.
std::optional<Bad2CycleWitness> find_bad_2_cycle(const CliqueArrangement& a);
bool has_bad_2_cycle(const CliqueArrangement& a);
/// Checks the definition from scratch (extremality is not checked).
bool verify_bad_2_cycle(const CliqueArrangement& a, const Bad2CycleWitness& w);

/// Exhaustive search for a bad k-cycle with T0 the smallest terminal id.
Bounded<BadKCycleWitness> find_bad_k_cycle(const CliqueArrangement& a, int k,
                                           std::uint64_t budget = search_budget());
bool verify_bad_k_cycle(const CliqueArrangement& a, const BadKCycleWitness& w);

/// Explicit search over k = 3..min(k_max, #sinks); the budget is shared.
Bounded<BadKCycleWitness> find_bad_cycle_k_ge_3(const CliqueArrangement& a, int k_max = 6,
                                                std::uint64_t budget = search_budget());

/// Decision shortcut: a chordal graph has a bad k-cycle for some k >= 3
/// exactly when it is not strongly chordal. Throws PreconditionError for
/// non-chordal input.
bool has_bad_cycle_k_ge_3(const Graph& g);

/// Nodes and vertices chosen while turning an extremal bad 2-cycle into an
/// induced obstruction. Node ids refer to the arrangement; -1 marks "absent".
struct ObstructionState {
  std::array<std::array<int, 2>, 2> p{};      // P_ij
  std::array<std::array<int, 2>, 2> q{};      // Q_ij, sinks
  std::array<std::array<VertexSet, 2>, 2> p_reduced;  // P_ij \ T
  std::array<int, 2> u{-1, -1};
  std::array<std::array<int, 2>, 2> v{};
  std::array<std::array<int, 2>, 2> w{};
  std::array<int, 2> wk{-1, -1};               // w_0, w_1
  std::array<int, 2> t_prime{-1, -1};          // sinks T'_0, T'_1
  std::array<bool, 2> v_clique{};              // V_0, V_1
  std::array<bool, 2> d_clique{};              // D_0, D_1
};

struct Obstruction {
  PatternMatch match;
  /// "1", "2" or "3" followed by the subcase, e.g. "3(vii)".
  std::string case_label;
  ObstructionState state;
};

/// Builds an induced G1..G7 from an extremal bad 2-cycle. Throws
/// PreconditionError when `g` is not strongly chordal or `w` is not extremal,
/// InvariantViolation (with the claim id) when a promised object is missing.
Obstruction extract_obstruction(const Graph& g, const CliqueArrangement& a, const Bad2CycleWitness& w);

}  // namespace cak
