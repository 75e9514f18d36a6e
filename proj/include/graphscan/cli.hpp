#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphscan::cli {

// Entry point behind the command-line binary, exposed so tests can drive
// subcommands in-process. args holds everything after the program name;
// results go to out, diagnostics and drawn seeds to err. Returns the
// process exit code: 0 on success, nonzero on any error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// argv form used by main(); writes to std::cout / std::cerr.
int run(int argc, char** argv);

}  // namespace graphscan::cli
