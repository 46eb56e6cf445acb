#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cak/errors.hpp"
#include "cak/graph.hpp"
#include "cak/json_io.hpp"

namespace cak {

enum class CampaignKind { theorem5, theorem10, lemmas, corollary11, sweep, leafroot };

std::string_view campaign_name(CampaignKind k);
/// Throws PreconditionError for unknown names.
CampaignKind parse_campaign(std::string_view name);

struct CampaignConfig {
  CampaignKind kind = CampaignKind::theorem10;
  int count = 100;
  /// Largest instance size.
  int n = 10;
  std::uint64_t seed = 1;
  /// Worker threads; 0 picks the hardware concurrency.
  int jobs = 0;
  std::uint64_t budget = search_budget();
};

struct CampaignFailure {
  std::uint64_t index = 0;
  std::string graph;  // serialized instance
  std::string message;
};

struct CampaignReport {
  CampaignKind kind = CampaignKind::theorem10;
  CampaignConfig config;
  long instances = 0;
  /// Instances whose verdict could not be reached within the search budget.
  long skipped = 0;
  std::vector<CampaignFailure> failures;
  /// Named tallies summed over instances (positives, planted, ...).
  std::map<std::string, long> stats;
  double seconds = 0;

  long counterexamples() const { return static_cast<long>(failures.size()); }
  bool clean() const { return failures.empty() && skipped == 0; }
};

/// Runs the campaign with per-instance streams keyed by (seed, index);
/// the report does not depend on the thread count.
CampaignReport run_campaign(const CampaignConfig& cfg);

std::string report_to_text(const CampaignReport& r);
Json report_to_json(const CampaignReport& r);

/// All connected graphs on n vertices, one per isomorphism class, in
/// canonical form. Intended for n <= 8.
std::vector<Graph> connected_graphs(int n);

}  // namespace cak
