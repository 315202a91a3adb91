#pragma once

#include <stdexcept>
#include <string>

namespace hfi {

// Argument outside an operation's contract (non-positive gamma argument,
// inverted interval, parameter tuple violating its invariants, ...).
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

// Adaptive quadrature exhausted its subdivision budget, or the integrand
// produced a non-finite value.
struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Result magnitude not representable in double.
struct OverflowError : std::runtime_error {
    explicit OverflowError(const std::string& msg) : std::runtime_error(msg) {}
};

// Expression source rejected by the parser; column is 1-based.
struct SyntaxError : std::runtime_error {
    int column;
    SyntaxError(const std::string& msg, int col)
        : std::runtime_error(msg + " at column " + std::to_string(col)), column(col) {}
};

// Expression evaluation hit ln of a non-positive argument or a non-finite
// intermediate/final value.
struct EvalError : std::runtime_error {
    explicit EvalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hfi
