#pragma once

#include <ostream>

namespace cliffaut {

/// Runs the command line tool. Returns 0 on success, 1 when a check fails
/// and 2 on usage or parse errors.
int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cliffaut
