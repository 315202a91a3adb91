#pragma once

namespace hfi {

struct SpecFunResult {
    double value;
    double est_abs_error;  // finite, >= 0
};

// Gamma function on x > 0. Relative error <= 1e-13 on [1e-3, 170];
// throws DomainError for x <= 0 or non-finite x, OverflowError past the
// representable factorial range (x > ~171.62).
double gamma(double x);

// ln Gamma(x) for x > 0.
double log_gamma(double x);

// beta(x, y) = Gamma(x)Gamma(y)/Gamma(x+y), x > 0, y > 0. Computed from
// log-Gamma when the direct product would overflow.
double beta(double x, double y);

// Gauss hypergeometric 2F1(a, b; c; z) for c > b > 0, |z| < 1, via the Euler
// integral (1/beta(b, c-b)) * int_0^1 t^(b-1) (1-t)^(c-b-1) (1-z t)^(-a) dt.
// Endpoint singularities (b < 1 or c-b < 1) are removed exactly by power
// substitutions before adaptive quadrature. Relative error <= 1e-10.
double hyp2f1(double a, double b, double c, double z);
SpecFunResult hyp2f1_full(double a, double b, double c, double z);

// Independent oracle: the Gauss power series sum_k (a)_k (b)_k / (c)_k z^k / k!.
// Intended for |z| <= 0.9 where convergence is unproblematic.
double hyp2f1_series(double a, double b, double c, double z);

SpecFunResult gamma_full(double x);
SpecFunResult beta_full(double x, double y);

}  // namespace hfi
