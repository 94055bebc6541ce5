#ifndef GROWDOM_CLI_HPP
#define GROWDOM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace growdom::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kNumericalFailure = 2,
  kVerificationFail = 3,
};

/// growdom <subcommand> [config] [flags]
///
/// Subcommands: run, steady, eigen, classify, sweep AXIS VALUES,
/// verify CHECK (comparison | laplacian-sign | sandwich), plot.
/// Flags: --out DIR, --dt X|auto, --t-end X, --grid N, --quiet.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace growdom::cli

#endif  // GROWDOM_CLI_HPP
