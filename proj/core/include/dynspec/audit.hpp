#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace dynspec {

/// One evaluated configuration of a cataloged claim. `claimed` and
/// `computed` hold the displayable values (numbers, arrays, or {re,im}
/// pairs); `params` records everything needed to reproduce `computed`.
struct AuditCase {
  std::string label;
  nlohmann::ordered_json params;
  nlohmann::ordered_json claimed;
  nlohmann::ordered_json computed;
  bool match = false;
};

/// One cataloged claim. `tolerance` is the absolute root tolerance used for
/// the comparison; 0 means the comparison is exact (coefficients).
struct AuditEntry {
  std::string claim_id;
  std::string title;
  std::string paper_location;
  double tolerance = 0.0;
  std::vector<AuditCase> cases;
  bool match = false;  // true iff every case matches
  std::string note;
};

/// Structured comparison of the printed quantitative claims against what the
/// toolkit computes. The catalog is fixed: claims "a".."h", each exactly
/// once; mismatches are results, not errors.
struct DiscrepancyReport {
  int schema_version = 1;
  double default_tolerance = 1e-9;
  std::vector<AuditEntry> entries;

  const AuditEntry& entry(const std::string& claim_id) const;  // throws
};

/// Runs the full audit catalog. `tolerances` overrides the per-claim
/// absolute tolerance (key = claim id); unknown keys throw InvalidInput.
/// Claims compared exactly (coefficient identities) ignore overrides.
DiscrepancyReport audit_claims(const std::map<std::string, double>& tolerances = {});

nlohmann::ordered_json to_json(const DiscrepancyReport& report);

}  // namespace dynspec
