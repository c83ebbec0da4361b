#ifndef NCDP_CLI_HPP
#define NCDP_CLI_HPP

// The ncdp command line: subcommands hilbert, center, jacobi, saito, classify,
// matfact, cohomology and poisson-check, each emitting a JSON or text report.
// Exit codes: 0 when every check passes, 1 when a check fails, 2 on bad usage.

#include <string>
#include <vector>

namespace ncdp::cli {

inline constexpr const char* kVersion = "0.1.0";

struct Outcome {
    int exit_code = 0;
    std::string output;  // the report, or help text
    std::string error;   // usage and parse errors
};

// args excludes the program name. With --out the report goes to the file and
// output stays empty.
Outcome run(const std::vector<std::string>& args);

int main(int argc, char** argv);

}  // namespace ncdp::cli

#endif  // NCDP_CLI_HPP
