// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>

namespace emobee {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitConfig = 2,
  kExitIo = 3,
  kExitCheckFailed = 4,
};

/// Entry point of the `emobee` tool; returns the process exit status.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace emobee
