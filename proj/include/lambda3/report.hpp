#pragma once

#include <string>
#include <vector>

namespace lambda3 {

// One quantitative comparison of a computed value against the bundled
// reference data, with its tolerance pinned in code.
struct CheckResult {
    std::string name;    // stable id, e.g. "steady omega=4.5 rho11"
    bool pass;
    std::string detail;  // computed value, reference, tolerance
};

// Run every reference check: steady-state tables at three drive strengths,
// the eigenvalue table, trace and zero-mode identities, weak-field limits,
// late- and early-time decay fits against the tabulated lifetimes, the
// population-crossing drive strengths, the complex-onset drive strength, the
// slow-lifetime power-law slope, and conservation of the population sum.
std::vector<CheckResult> reference_checks();

// Names of the checks whose name starts with the given prefix.
std::vector<CheckResult> checks_with_prefix(
    const std::vector<CheckResult>& all, const std::string& prefix);

}  // namespace lambda3
