#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nqs::cli {

/// Exit codes: 0 success, 1 invalid parameters, 2 infeasible bound,
/// 3 numeric failure or a verification suite reporting violations.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int dispatch(int argc, char** argv);

}  // namespace nqs::cli
