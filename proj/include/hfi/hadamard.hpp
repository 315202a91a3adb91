#pragma once

#include <cmath>

#include "hfi/errors.hpp"
#include "hfi/functions.hpp"
#include "hfi/quadrature.hpp"
#include "hfi/specfun.hpp"

namespace hfi {

// Fractional integrals with logarithmic kernel and multiplicative measure:
//
//   hadamard_left (f, a, x, theta) = (1/Gamma(theta)) int_a^x (ln(x/t))^(theta-1) f(t) dt/t
//   hadamard_right(f, x, b, theta) = (1/Gamma(theta)) int_x^b (ln(t/x))^(theta-1) f(t) dt/t
//
// For theta < 1 the kernel blows up at the inner endpoint. Substituting
// u = |ln(./t)| and then u = v^(1/theta) absorbs u^(theta-1) exactly:
//
//   left : (1/(theta Gamma(theta))) int_0^{ln(x/a)^theta} f(x e^{-v^(1/theta)}) dv
//   right: (1/(theta Gamma(theta))) int_0^{ln(b/x)^theta} f(x e^{+v^(1/theta)}) dv
//
// so the integrand handed to the adaptive scheme is bounded for every theta.

namespace detail {

inline void check_hadamard_args(double inner, double outer, double theta, const char* who) {
    if (!(inner > 0.0) || !(inner < outer))
        throw DomainError(std::string(who) + ": need 0 < lower endpoint < upper endpoint");
    if (!(theta > 0.0) || !std::isfinite(theta))
        throw DomainError(std::string(who) + ": need theta > 0");
}

}  // namespace detail

template <class F>
double hadamard_left_fn(F&& f, double a, double x, double theta,
                        const QuadratureConfig& cfg = {}) {
    detail::check_hadamard_args(a, x, theta, "hadamard_left");
    const double upper = std::pow(std::log(x / a), theta);
    const double inv_theta = 1.0 / theta;
    auto g = [&](double v) { return f(x * std::exp(-std::pow(v, inv_theta))); };
    return integrate_fn(g, 0.0, upper, cfg).value / (theta * gamma(theta));
}

template <class F>
double hadamard_right_fn(F&& f, double x, double b, double theta,
                         const QuadratureConfig& cfg = {}) {
    detail::check_hadamard_args(x, b, theta, "hadamard_right");
    const double upper = std::pow(std::log(b / x), theta);
    const double inv_theta = 1.0 / theta;
    auto g = [&](double v) { return f(x * std::exp(std::pow(v, inv_theta))); };
    return integrate_fn(g, 0.0, upper, cfg).value / (theta * gamma(theta));
}

double hadamard_left(const FunctionSpec& f, double a, double x, double theta,
                     const QuadratureConfig& cfg = {});
double hadamard_right(const FunctionSpec& f, double x, double b, double theta,
                      const QuadratureConfig& cfg = {});

}  // namespace hfi
