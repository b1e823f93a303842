#pragma once

#include <iosfwd>

namespace specsl::cli {

enum ExitCode : int {
  kOk = 0,
  kStructural = 1,
  kSemantic = 2,
  kBudget = 3,
};

/// Entry point of the `specsl` tool, with streams injectable for tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace specsl::cli
