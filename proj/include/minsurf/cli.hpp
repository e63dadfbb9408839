#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "minsurf/series.hpp"

namespace minsurf::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kInputError = 2,
  kQuadratureFailure = 3,
};

/// Parses an `re,im` literal. Throws InputError.
Complex parse_complex(const std::string& text);
/// Parses a comma-separated list of reals. Throws InputError.
std::vector<double> parse_list(const std::string& text);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace minsurf::cli
