#pragma once

#include <iosfwd>

namespace finembed::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,         // success, or Yes for `check`
  kNo = 1,         // definite No for `check`
  kUnknown = 2,    // Unknown verdict or horizon exhausted
  kUsage = 3,      // bad flags or unparsable expression
  kLawFailure = 4  // law fail, failed verification, or oracle contradiction
};

/// Entry point of `fetool`, writing to the given streams.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace finembed::cli
