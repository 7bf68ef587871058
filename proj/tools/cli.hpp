#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace flagcx::cli {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 on domain errors or theorem failures, 2 on usage errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flagcx::cli
