#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace thetawb {

struct ClaimParams {
  int n_min = -1;  // -1 means use the claim's default
  int n_max = -1;
  long trials = -1;
  std::uint64_t seed = 2026;
  int jobs = 1;
};

struct ClaimRow {
  std::string subject;
  std::string predicted;
  std::string observed;
  bool match = false;
  // Required rows feed the pass/fail verdict; the rest are informational
  // (e.g. small-order probes of statements that only claim to hold for
  // large orders).
  bool required = true;
};

struct ClaimReport {
  std::string claim;
  std::string title;
  std::string detail;
  ClaimParams params;  // the resolved values actually used
  std::vector<ClaimRow> rows;
  std::vector<std::string> artifacts;  // graph6 witnesses, sorted, deduplicated
  bool must_hold = true;
  bool passed = false;  // every required row matched
};

struct ClaimInfo {
  std::string id;
  std::string title;
  bool must_hold;
};

const std::vector<ClaimInfo>& claim_catalog();
ClaimReport run_claim(const std::string& id, const ClaimParams& params = {});

// Reports render byte-identically for identical inputs: no timestamps, no
// floating point, rationals printed exactly.
std::string render_report_json(const std::vector<ClaimReport>& reports);
std::string render_report_csv(const std::vector<ClaimReport>& reports);
bool reports_pass(const std::vector<ClaimReport>& reports);

}  // namespace thetawb
