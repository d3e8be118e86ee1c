#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symconn {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 1;     // usage, I/O or file-format error
inline constexpr int kExitSemantic = 2;  // failed precondition or identity

/// Runs one command. `args` excludes the program name.
///
///   verify <file> [--vector NAME]... [--all-invariant] [--beta Q]
///                 [--format human|machine]
///   moduli <file>
///   holonomy <file> [--beta Q]
///   paper-example [--beta Q | --symbolic]
///   canonicalize <file>
///   export <catalog-name> [--beta Q]
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace symconn
