#pragma once

#include <string>
#include <vector>

namespace plethyra::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // on failure: the identity and first differing coefficient
};

// Module-level invariants at their stated ranges.
std::vector<CheckResult> run_module_invariants();

// The acceptance criteria, exact rational equality throughout.
std::vector<CheckResult> run_acceptance_criteria();

// Both suites.
std::vector<CheckResult> run_all_checks();

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace plethyra::verify
