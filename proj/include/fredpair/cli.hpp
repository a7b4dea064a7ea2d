#pragma once

#include <string>
#include <vector>

namespace fredpair {

/// Command-line front end.  Subcommands: analyze, classify, ginv, fold,
/// quotient, synth, random, check.  Exit codes: 0 success; 2 malformed
/// command line or JSON; 3 shape or validation failure; 4 violated
/// structural identity.
int run_cli(int argc, const char* const* argv);

/// Same, for arguments without the program name.
int run_cli(const std::vector<std::string>& args);

} // namespace fredpair
