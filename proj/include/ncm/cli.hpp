#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncm::cli {

// Exit codes: 0 all verdicts pass, 1 verification failure, 2 usage error,
// 3 enumeration guard breach.  args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncm::cli
