#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace heatsym {

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;
};

struct AcceptanceReport {
  std::vector<CriterionResult> results;
  bool all_passed = true;
};

// Runs the ten acceptance criteria; seed fixes every sampled object.
// threads > 1 fans the independent criteria across workers.
AcceptanceReport run_acceptance(uint64_t seed, int threads = 1);

std::string format_report(const AcceptanceReport& r);

}  // namespace heatsym
