#pragma once

#include <iosfwd>

namespace jordan {

// Entry point of the jordan-flow tool. Returns 0 on success, 1 when a
// computation fails (non-convergence, table mismatch, non-Jordan input) and
// 2 on usage or input errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jordan
