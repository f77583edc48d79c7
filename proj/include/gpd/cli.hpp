#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gpd::cli {

/// Runs one command. `args` excludes the program name.
///
/// Exit status: 0 when the property holds or the construction succeeded,
/// 1 when the property fails (the witness goes to `out`), 2 for invalid
/// input or usage (diagnostic on `err`).
///
/// Constructions print the resulting document to `out`, or write it to the
/// file named by -o and print a one-line summary.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gpd::cli
