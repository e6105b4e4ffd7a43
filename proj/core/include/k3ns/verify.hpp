#pragma once

#include <string>
#include <vector>

#include "k3ns/report.hpp"

namespace k3ns {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Each group implements one acceptance criterion; every comparison is
// exact. The expected values are transcriptions of the classification
// tables this library re-derives.
std::vector<CheckResult> verify_table1();                 // 1
std::vector<CheckResult> verify_classification_tables();  // 2
std::vector<CheckResult> verify_charts();                 // 3 (order 2 and 3)
std::vector<CheckResult> verify_lattice_catalog();        // 4
std::vector<CheckResult> verify_euler_lefschetz();        // 5
std::vector<CheckResult> verify_fiber_catalog(unsigned long seed);  // 6
std::vector<CheckResult> verify_invariance(unsigned long seed);     // 7
std::vector<CheckResult> verify_appendix();               // 8
std::vector<CheckResult> verify_moduli();                 // 9
std::vector<CheckResult> verify_properties(unsigned long seed);     // 10

struct VerifySummary {
  std::vector<CheckResult> checks;
  int failures = 0;
};
VerifySummary verify_all(unsigned long seed);

// The per-criterion groups in order 1..10 (used by the acceptance suite).
std::vector<std::vector<CheckResult> (*)(unsigned long)> criterion_runners();

// Canonical CLI documents (filename -> byte-exact content) compared against
// or regenerated into a golden directory.
std::map<std::string, std::string> golden_documents(unsigned long seed);

}  // namespace k3ns
