#pragma once

#include <iosfwd>

namespace modcodes::cli {

/// Runs the `modcodes` command line. Returns 0 on success, 1 on domain errors and 2 on
/// usage errors (synopsis on `err`).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace modcodes::cli
