#ifndef MIXDISC_ERRORS_HPP
#define MIXDISC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mixdisc {

/// Malformed or inconsistent input (dimension mismatch, bad index, ...).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Input outside the mathematical domain of an operation
/// (norm too large, beta <= 1, non positive definite, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Work required exceeds a configured cap.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Iterative scheme stopped before reaching the requested tolerance.
struct ConvergenceError : std::runtime_error {
    ConvergenceError(const std::string& what, double residual, int iterations)
        : std::runtime_error(what), residual(residual), iterations(iterations) {}
    double residual;
    int iterations;
};

/// File or document could not be read or parsed.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mixdisc

#endif
