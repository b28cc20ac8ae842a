#pragma once

#include <iosfwd>

namespace glmn {

/// Command line front end. Exit codes: 0 all requested checks pass, 1 a
/// verification failed, 2 usage or input error.
int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace glmn
