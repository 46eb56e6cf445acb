#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cak/arrangement.hpp"
#include "cak/cycles.hpp"

namespace cak {

struct DotHighlight {
  std::vector<int> nodes;
  std::vector<std::pair<int, int>> arcs;
};

/// Starters, terminals, the middle node and every arc on the four paths.
DotHighlight highlight_of(const Bad2CycleWitness& w);

/// One record node per arrangement node listing its vertex labels, Hasse
/// arcs as edges, sinks double framed, highlighted nodes and arcs bold.
std::string arrangement_to_dot(const CliqueArrangement& a, const DotHighlight& highlight = {});

}  // namespace cak
