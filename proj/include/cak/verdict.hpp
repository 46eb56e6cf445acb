#pragma once

#include <optional>
#include <string>

#include "cak/arrangement.hpp"
#include "cak/chordal.hpp"
#include "cak/cycles.hpp"
#include "cak/json_io.hpp"
#include "cak/leafroot.hpp"
#include "cak/patterns.hpp"

namespace cak {

struct ClassifyOptions {
  /// Run the leaf-root search when the graph has at most this many vertices
  /// (0 disables it).
  int leafroot_max_n = 0;
  std::uint64_t budget = search_budget();
};

struct Verdict {
  Graph graph;
  bool chordal = false;
  bool strongly_chordal = false;
  bool ptolemaic = false;
  std::optional<HoleWitness> hole;
  std::optional<GemWitness> gem;
  int arrangement_nodes = 0;
  int arrangement_sinks = 0;
  std::optional<Bad2CycleWitness> bad2cycle;
  std::optional<PatternMatch> pattern;
  std::optional<Obstruction> obstruction;
  std::optional<NonLeafPowerCertificate> certificate;
  std::optional<LeafRootSearch> leafroot;
  /// Both bad 2-cycle and pattern detectors agree (always true unless a
  /// theorem-level bug surfaced).
  bool consistent = true;
  std::string inconsistency;
};

/// Runs every applicable analysis. Strongly chordal graphs get both the bad
/// 2-cycle and the pattern detector; disagreement is recorded, not thrown.
Verdict classify(const Graph& g, const ClassifyOptions& opts = {});

Json verdict_to_json(const Verdict& v);
std::string verdict_to_text(const Verdict& v);

}  // namespace cak
