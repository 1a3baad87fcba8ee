#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flowvol {

/// Exit codes: 0 success, 1 failed verification or disagreeing paths,
/// 2 usage or parse error.
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

} // namespace flowvol
