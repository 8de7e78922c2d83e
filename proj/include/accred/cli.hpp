#pragma once

#include <iosfwd>

namespace accred {

// Parses argv and runs one subcommand. Exit status: 0 success, 1 domain error
// (one diagnostic line on err), 2 usage error (usage text on err).
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace accred
