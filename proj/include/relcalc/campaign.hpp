#ifndef RELCALC_CAMPAIGN_HPP
#define RELCALC_CAMPAIGN_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "relcalc/io.hpp"

namespace relcalc {

enum class Scenario { Relation1Dim, RelationPDim, PencilRankOne, SnOracle, Fixtures };

std::string scenario_name(Scenario s);
Scenario scenario_parse(const std::string& name);

struct CampaignConfig {
  FieldTag field = FieldTag::rationals();
  std::size_t dmin = 2, dmax = 2;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  Scenario scenario = Scenario::Fixtures;
  std::size_t nmax = 0;  // 0 = default 2 * dmax
  std::size_t p = 1;     // perturbation order for relation-pdim
  std::size_t chainspace_mmax = 4;
};

struct Violation {
  std::uint64_t trial = 0;
  std::string rule;
  long n = 0;
  std::string lambda;  // empty when not applicable
  long lo = 0, hi = 0, value = 0;
};

struct TrialSummary {
  std::uint64_t trial = 0;
  std::string kind;
  long checks = 0;
  long violations = 0;
};

struct Report {
  CampaignConfig config;
  std::vector<TrialSummary> trials;
  std::vector<Violation> violations;
  // rule -> observed value -> count
  std::map<std::string, std::map<long, std::uint64_t>> histograms;
  long wall_ms = 0;
  bool pass() const { return violations.empty(); }
};

// Deterministic given (config, seed): identical runs give identical reports
// except for wall_ms.
Report run_campaign(const CampaignConfig& cfg);

Json campaign_config_to_json(const CampaignConfig& cfg);
Json report_to_json(const Report& rep);

}  // namespace relcalc

#endif
