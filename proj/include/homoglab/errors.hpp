#pragma once

#include <stdexcept>
#include <string>

namespace homog {

// Error taxonomy used across the library. The CLI maps these to exit codes:
// validation-type errors -> 2, solver non-convergence -> 3.

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidInput : Error {
    using Error::Error;
};

struct InvalidParameter : Error {
    using Error::Error;
};

struct OutOfExtent : Error {
    using Error::Error;
};

struct NonConvergence : Error {
    double last_residual = 0.0;
    NonConvergence(const std::string& msg, double residual)
        : Error(msg), last_residual(residual) {}
};

struct OracleFailure : Error {
    using Error::Error;
};

struct InsufficientData : Error {
    using Error::Error;
};

struct SolverError : Error {
    using Error::Error;
};

}  // namespace homog
