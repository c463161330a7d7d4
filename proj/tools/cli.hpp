#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace modclass::cli {

/// Runs one command line (without the program name). Exit status: 0 success,
/// 1 usage or input error, 2 a consistency failure or a failed count/verify.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modclass::cli
