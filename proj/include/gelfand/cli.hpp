#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gelfand {

/// Runs one subcommand. Exit codes: 0 success, 1 domain error, 2 numerical
/// failure, 64 usage error.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Expands `--config FILE` (flat key=value lines) into flags placed right
/// after the subcommand, so flags given explicitly win.
std::vector<std::string> expand_config(const std::vector<std::string>& args);

}  // namespace gelfand
