#pragma once

#include <iosfwd>

namespace arbora {

/// Runs one `arbora` command. Returns 0 on success, 1 when a verification
/// check fails, 2 on usage or budget errors (one diagnostic line on `err`).
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace arbora
