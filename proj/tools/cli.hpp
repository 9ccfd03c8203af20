#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hermtool {

/* Exit codes: 0 success, 1 a checked statement came out false, 2 usage or
 * parse error.  args excludes the program name. */
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace hermtool
