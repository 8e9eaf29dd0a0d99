#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace linfty::cli {

// Parses the command line, runs one command and returns its exit code.
int run_app(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace linfty::cli
