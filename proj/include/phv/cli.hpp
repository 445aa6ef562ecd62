#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace phv::cli {

/// Exit codes of the command-line driver.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;   // a verifier reported a violation
inline constexpr int kExitUsage = 2;  // usage, parse or precondition error

/// Runs one `phv` command. `args` excludes the program name. Module arguments
/// are either expressions ("GL1 x SL2 : 3w1") or catalog ids ("Ks A-2(n=3)").
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace phv::cli
