#pragma once

#include <string>
#include <vector>

#include "renflow/golden.hpp"
#include "renflow/lax.hpp"

namespace renflow {

// Named structural check suites shared by the CLI and the acceptance
// binary.  Every check is exact; a failing check carries a diagnostic.
std::vector<CheckResult> verify_hopf(int degree);
std::vector<CheckResult> verify_character(int degree);
std::vector<CheckResult> verify_birkhoff(int degree);
std::vector<CheckResult> verify_lax(int degree);
std::vector<CheckResult> verify_double(int cutoff);

// Dispatch by suite name: hopf | character | birkhoff | lax | double | all.
std::vector<CheckResult> verify_suite(const std::string& suite, int degree);

struct AcceptanceCriterion {
  int index = 0;
  std::string title;
  bool pass = false;
  std::vector<CheckResult> checks;
};

struct AcceptanceReport {
  std::vector<AcceptanceCriterion> criteria;
  bool all_pass() const;
};

// The acceptance gate: the full list of criteria with one verdict each.
AcceptanceReport run_acceptance();

std::string acceptance_text(const AcceptanceReport& report);

}  // namespace renflow
