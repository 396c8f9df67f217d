#pragma once

#include <stdexcept>
#include <string>

namespace roughlub {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed or inconsistent input data (config documents, tables, grids).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Config document error, carrying the 1-based line number when known (0 otherwise).
class ConfigError : public InputError {
public:
    ConfigError(const std::string& message, int line = 0)
        : InputError(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// An iterative method failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& message, int iterations, double residual)
        : std::runtime_error(message), iterations_(iterations), residual_(residual) {}

    int iterations() const noexcept { return iterations_; }
    double residual() const noexcept { return residual_; }

private:
    int iterations_;
    double residual_;
};

}  // namespace roughlub
