#pragma once

// Desk-scale experiments surfaced by the CLI: every reported number is
// produced by a library operation and re-checked against the property the
// experiment claims, so reports carry a pass/fail status.

#include <map>
#include <string>
#include <vector>

namespace fg {

struct ExperimentReport {
  std::string id;
  std::map<std::string, std::string> params;
  std::vector<std::string> log;   // human-readable lines, deterministic
  std::string csv;                // optional table
  bool pass = false;
};

/// Known ids: "dihedral-diameter" (params: max-len, ball),
/// "example-A2" (params: trace), "normal-growth" (params: word, rank, kmax).
/// Throws std::invalid_argument for unknown ids or bad parameters.
ExperimentReport run_experiment(const std::string& id,
                                const std::map<std::string, std::string>& params);

}  // namespace fg
