#pragma once

#include <string>

namespace lambda3 {

// %.17g: every double round-trips exactly through this representation.
std::string format_full(double x);

// %.10g: for human-facing summaries and error messages.
std::string format_short(double x);

}  // namespace lambda3
