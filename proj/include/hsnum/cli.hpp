#ifndef HSNUM_CLI_HPP_
#define HSNUM_CLI_HPP_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hsnum/severi.hpp"

namespace hsnum::cli {

enum ExitCode : int {
  kOk                 = 0,
  kVerificationFailed = 1,
  kUsage              = 2,
  kCapExceeded        = 3,
  kDisagreement       = 4,
  kUnbendable         = 5,
  kEmptyVariety       = 6,
  kDegenerate         = 7,
};

struct Context {
  // Replaces the Hurwitz engines for classify / hs / table / verify-paper.
  std::optional<HurwitzProvider> provider;
  // Value of HSNUM_CAP, if set.
  std::optional<std::string> env_cap;
  // Whether to look for a config file at the default location when --config
  // is not given.
  bool use_default_config = true;
};

// Runs one command line (without the program name). Records go to out,
// diagnostics to err; the return value is the process exit code.
int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err, Context const& ctx = {});

// Recomputes the reference triples and prints a pass/fail table. Returns
// kOk when every check passes and kVerificationFailed otherwise.
int verify_paper(HurwitzProvider const& provider, std::ostream& out,
                 std::ostream& err);

}  // namespace hsnum::cli

#endif  // HSNUM_CLI_HPP_
