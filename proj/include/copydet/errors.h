#pragma once

#include <stdexcept>
#include <string>

namespace copydet {

// Invalid inputs: malformed files, violated invariants, bad arguments.
// The CLI maps these to exit code 2.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Failures that occur while computing on valid inputs (singular systems,
// degenerate vectors, ...). The CLI maps these to exit code 3.
struct ComputeError : std::runtime_error {
    explicit ComputeError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace copydet
