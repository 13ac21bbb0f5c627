#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qdl {

// Exit codes: 0 success, 1 domain/precondition, 2 usage, 3 accuracy or
// conditioning. Reports go to `out`, diagnostics to `err`.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qdl
