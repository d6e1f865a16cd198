#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace slrk::cli {

/// Exit codes: 0 success, 1 usage or runtime error, 2 the claimed order
/// was not met.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_unverified = 2;

/// Runs one subcommand (verify, search, stability, stability-fig2b,
/// integrate, ns-converge, ns-run, tableau). args excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int main(int argc, char** argv);

}  // namespace slrk::cli
