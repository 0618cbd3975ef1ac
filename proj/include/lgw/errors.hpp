#pragma once

#include <stdexcept>
#include <string>

namespace lgw {

// Violation of an operation's stated precondition or malformed input.
// The CLI maps these to exit code 2.
struct input_error : std::invalid_argument {
    explicit input_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// A computation that could not be carried out (degenerate point draws after
// all retries, internal consistency failures). CLI exit code 1.
struct computation_error : std::runtime_error {
    explicit computation_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace lgw
