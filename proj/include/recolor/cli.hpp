#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace recolor {

/// The command-line surface: lowerbound, approx, exact, verify, gen, bench.
/// Returns 0 on success, 1 on validation errors, 2 on internal invariant
/// violations.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace recolor
