#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lstree {

enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_data = 2 };

/// Entry point of the lstree command line. args excludes the program name.
/// Verbs: build, cd-build, label, print, layout, serve.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lstree
