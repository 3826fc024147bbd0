#pragma once

#include <string>
#include <vector>

#include "quatype/verifier.hpp"

namespace quatype::cli {

struct SuiteRun {
  CheckConfig cfg;
  std::string suite;
  std::vector<CheckReport> reports;
};

// Human-readable report, one line per check plus counterexample details.
std::string format_text(const SuiteRun& run);

// Deterministic JSON report: no timings, fixed key order, numbers in
// shortest round-trip form.
std::string format_json(const SuiteRun& run);

std::string strategy_name(Strategy s);

}  // namespace quatype::cli
