#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace systolic::cli {

/// Exit codes shared by every subcommand.
enum Exit : int { Ok = 0, CheckFailed = 1, Usage = 2, Internal = 3 };

/// Runs one subcommand. `args` excludes the program name. Reports go to
/// `out` as one JSON document; diagnostics go to `err`.
///
/// The primary document is read from `in` unless --input names a file. It may
/// also be a bundle {"complex": ..., "action": ..., "surface": ..., "move": ...}
/// standing in for the separate --action, --surface and --move files.
int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace systolic::cli
