#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace hfi {

// A positive-domain scalar function together with its exact derivative.
// `key()` identifies the function within a process (used as a cache key), so
// distinct functions must not share a (name, source) pair.
struct FunctionSpec {
    std::string name;
    std::string source;  // expression text the spec was built from, if any
    std::function<double(double)> f;
    std::function<double(double)> df;
    double domain_lo = 0.0;  // > 0
    double domain_hi = 0.0;
    std::vector<std::array<double, 3>> convexity_hints;  // (alpha, m, q) known to certify

    std::string key() const { return name + "|" + source; }
};

// Parses `src`, differentiates it symbolically, and wraps both as callables.
// Throws SyntaxError on bad input, DomainError on an empty/invalid domain.
FunctionSpec make_function(const std::string& src, double lo, double hi, std::string name = "");

// Built-in functions: u, u^2, u^3, ln(u), exp(u/4) on [0.5, 2], u^-1.
const std::vector<FunctionSpec>& catalog();
const FunctionSpec* find_catalog(const std::string& name);

}  // namespace hfi
