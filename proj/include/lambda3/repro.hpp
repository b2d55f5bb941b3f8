#pragma once

#include <ostream>
#include <string>

namespace lambda3 {

// Regenerate the bundled reference data: one CSV per reference figure in
// out_dir (created if absent), then stream the pass/fail table of
// reference_checks(). Returns the number of failed checks.
int run_repro(const std::string& out_dir, std::ostream& out);

}  // namespace lambda3
