#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace raag {

/// Runs the command line with args excluding the program name. Returns 0 on
/// success, 1 when a verified bound fails or a comparison finds distinct
/// spectra, 2 on input errors (one diagnostic line on err).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace raag
