#pragma once

#include <iosfwd>

namespace sg {

/// Subcommands generate, check, render and jacobi. Returns 0 on success, 1 on
/// a failed check or geometry error, 2 on a usage or parse error.
int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sg
