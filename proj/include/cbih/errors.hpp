#pragma once

#include <stdexcept>
#include <string>

namespace cbih {

/// Base class for all toolkit errors. `code()` is a short stable token
/// meant for machine consumption (CLI prints it on stderr).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// A parameter or state lies outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& message) : Error("domain", message) {}
};

/// Evaluation requested too close to a pole of the expression.
class PoleError : public Error {
public:
    explicit PoleError(const std::string& message) : Error("pole", message) {}
};

/// The ODE integrator's conserved-quantity monitor exceeded its tolerance.
class StepTooLargeError : public Error {
public:
    explicit StepTooLargeError(const std::string& message) : Error("step-too-large", message) {}
};

/// The constant-spectrum classification received data inconsistent with
/// the tangential equation (a non-c-biharmonic input).
class InvalidCaseError : public Error {
public:
    explicit InvalidCaseError(const std::string& message) : Error("invalid-case", message) {}
};

/// Root counting/isolation was asked about the identically-zero polynomial.
class DegenerateError : public Error {
public:
    explicit DegenerateError(const std::string& message) : Error("degenerate", message) {}
};

} // namespace cbih
