#include <doctest.h>

#include "cak/campaign.hpp"
#include "cak/chordal.hpp"

using namespace cak;

TEST_CASE("connected graph counts up to isomorphism") {
  const std::size_t expect[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    auto gs = connected_graphs(n);
    CHECK(gs.size() == expect[n - 1]);
    for (const auto& g : gs) CHECK(is_connected(g));
  }
  CHECK_THROWS_AS(connected_graphs(9), PreconditionError);
}

TEST_CASE("reports do not depend on the thread count") {
  for (auto kind : {CampaignKind::theorem10, CampaignKind::lemmas, CampaignKind::theorem5}) {
    CampaignConfig cfg;
    cfg.kind = kind;
    cfg.count = 40;
    cfg.n = 10;
    cfg.seed = 3;
    cfg.jobs = 1;
    auto serial = run_campaign(cfg);
    cfg.jobs = 4;
    auto parallel = run_campaign(cfg);
    CHECK(serial.clean());
    CHECK(serial.stats == parallel.stats);
    CHECK(serial.instances == parallel.instances);
  }
}

TEST_CASE("campaign names") {
  CHECK(parse_campaign("corollary11") == CampaignKind::corollary11);
  CHECK(campaign_name(CampaignKind::sweep) == "sweep");
  CHECK_THROWS_AS(parse_campaign("theorem11"), PreconditionError);
  CampaignConfig cfg;
  cfg.kind = CampaignKind::corollary11;
  cfg.count = 20;
  auto r = run_campaign(cfg);
  auto j = report_to_json(r);
  CHECK(j["counterexamples"] == 0);
  CHECK(j["instances"] == 20);
}
