#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dersyz::cli {

/// Exit codes of the command line front end.
enum Exit : int { Ok = 0, Fails = 1, Inconclusive = 2, Usage = 64, DataError = 65 };

/// Runs one subcommand; the report goes to out, one-line errors to err.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dersyz::cli
