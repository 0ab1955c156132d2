#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "lieforge/lie_algebra.hpp"

namespace lieforge::cli {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitVacuous = 1,  // a hypothesis failed and --strict was given
  kExitFatal = 2,    // some report has implication_ok = false
  kExitInput = 3,    // unreadable or invalid input
};

/// Runs one command line (without the program name). Reports go to `out`,
/// error messages to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Same, but the algebra is supplied directly and --file/--catalog are
/// ignored. Nothing validates the supplied algebra except the validate
/// command itself; this is how tests feed corrupted tensors to checkers.
int run_on(const LieAlgebra& L, const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lieforge::cli
