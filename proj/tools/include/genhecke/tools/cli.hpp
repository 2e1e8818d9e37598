#pragma once

#include <ostream>

namespace genhecke::tools {

/// Runs one command line. Exit codes: 0 all checks pass, 1 a check failed,
/// 2 usage error.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace genhecke::tools
