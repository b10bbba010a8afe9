#pragma once

// Acceptance suite: exhaustive and sampled checks of the encode/reconstruct
// correspondence on small trees. Shared by the acceptance test and the
// `selftest` subcommand.

#include <functional>
#include <string>

namespace symtern {

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;
  double seconds;
};

// Runs criteria 1-10 in order, reporting each as soon as it finishes.
// Returns true when all of them pass.
bool run_acceptance(const std::function<void(const CriterionResult&)>& report);

std::string format_result(const CriterionResult& r);

}  // namespace symtern
