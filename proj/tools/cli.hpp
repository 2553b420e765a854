#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fibredim::cli {

/// Exit codes: 0 success, 2 parse/validation error, 3 unsupported
/// configuration, 4 inconsistent witnesses, 1 internal error. Reports go to
/// `out` (exactly one JSON object in --json mode), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        bool use_color = false);

}  // namespace fibredim::cli
