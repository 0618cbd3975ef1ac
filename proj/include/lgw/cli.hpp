#pragma once

#include <string>
#include <vector>

namespace lgw::cli {

struct CommandResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

// Runs one command line (without the program name), capturing the streams.
// Exit codes: 0 success, 1 computation error, 2 usage error.
CommandResult run_command(const std::vector<std::string>& args);

// Entry point for the binary: forwards to run_command and the real streams.
int run_main(int argc, char** argv);

}  // namespace lgw::cli
