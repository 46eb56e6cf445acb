#pragma once

#include <json.hpp>

#include "cak/arrangement.hpp"
#include "cak/chordal.hpp"
#include "cak/cycles.hpp"
#include "cak/leafroot.hpp"
#include "cak/patterns.hpp"

namespace cak {

using Json = nlohmann::json;

/// Vertex sets are arrays of labels; node references carry both the id and
/// the member labels. Readers resolve labels against the graph and throw
/// PreconditionError on anything that does not resolve.
Json set_to_json(const Graph& g, const VertexSet& s);
VertexSet set_from_json(const Graph& g, const Json& j);

Json bad2_to_json(const CliqueArrangement& a, const Bad2CycleWitness& w);
Bad2CycleWitness bad2_from_json(const CliqueArrangement& a, const Json& j);

Json kcycle_to_json(const CliqueArrangement& a, const BadKCycleWitness& w);

/// {"pattern": id, "roles": {"x0": label, ...}}
Json match_to_json(const Graph& g, const PatternMatch& m);
PatternMatch match_from_json(const Graph& g, const Json& j);

Json obstruction_to_json(const Graph& g, const Obstruction& o);

Json certificate_to_json(const Graph& g, const NonLeafPowerCertificate& c);
NonLeafPowerCertificate certificate_from_json(const Graph& g, const Json& j);

Json sun_to_json(const Graph& g, const SunWitness& w);
Json hole_to_json(const Graph& g, const HoleWitness& w);

Json model_to_json(const LeafRootModel& m);
LeafRootModel model_from_json(const Json& j);

}  // namespace cak
