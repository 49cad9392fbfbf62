#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dsurf {

/// Runs one `dsurf` invocation (arguments without the program name).
/// Returns 0 on success, 1 on a failed verification, 2 on usage or input errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dsurf
