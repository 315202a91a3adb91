#pragma once

#include <optional>
#include <string>

#include "hfi/quadrature.hpp"

namespace hfi {

// Full parameter tuple of the bound inequalities. p = 0 is the sentinel for
// "conjugate exponent unused" and is valid only with q = 1 (the power-mean
// route); otherwise p > 1 with 1/p + 1/q = 1.
struct InequalityParams {
    double a = 1.0, b = 4.0, x = 2.0;
    double theta = 1.0, lambda = 0.0, alpha = 1.0, m = 1.0;
    double q = 1.0, p = 0.0;

    void validate() const;  // throws DomainError on violation
};

// c0(theta, lambda) = int_0^1 |t^theta - lambda| dt, in closed form.
double c0(double theta, double lambda);
double c0_quad(double theta, double lambda, const QuadratureConfig& cfg = {});

// c_k = int_0^1 |t^theta - lambda| * ratio^(q m t) * w(t) dt with
// ratio = x/a (k in {1,2}) or x/b (k in {3,4}), w = t^alpha (k odd) or
// 1 - t^alpha (k even). Quadrature split at the kink t* = lambda^(1/theta).
double c_k(int k, const InequalityParams& P, const QuadratureConfig& cfg = {});

// r0(theta, lambda, p) = int_0^1 |t^theta - lambda|^p dt via the three-branch
// closed form (lambda = 0, lambda = 1, and the beta/2F1 middle branch).
double r0(double theta, double lambda, double p);
double r0_quad(double theta, double lambda, double p, const QuadratureConfig& cfg = {});

// r_k = int_0^1 ratio^(m q t) * w(t) dt, same ratio/weight selection as c_k.
double r_k(int k, const InequalityParams& P, const QuadratureConfig& cfg = {});

// t_k = int_0^1 |t^theta - lambda|^p * ratio^(m p t) dt, ratio = x/a (k = 1)
// or x/b (k = 2), split at the kink.
double t_k(int k, const InequalityParams& P, const QuadratureConfig& cfg = {});

// v12(1) = int_0^1 |t^theta - lambda|^q t^alpha dt and
// v12(2) = int_0^1 |t^theta - lambda|^q (1 - t^alpha) dt, three-branch closed
// forms; V1 + V2 = r0(theta, lambda, q).
double v12(int which, double theta, double lambda, double alpha, double q);
double v12_quad(int which, double theta, double lambda, double alpha, double q,
                const QuadratureConfig& cfg = {});

// v34(3) = int_0^1 (x/a)^(p m t) dt = ((x/a)^(mp) - 1)/ln((x/a)^(mp)) with a
// 3-term Taylor fallback when |mp ln(x/a)| < 1e-8; v34(4) uses x/b.
double v34(int which, const InequalityParams& P);
double v34_quad(int which, const InequalityParams& P, const QuadratureConfig& cfg = {});

enum class ConstantTag { c0, c1, c2, c3, c4, r0, r1, r2, r3, r4, t1, t2, v1, v2, v3, v4 };
enum class EvalRoute { closed_form, quadrature };

struct BoundConstants {
    ConstantTag tag;
    double value = 0.0;  // >= 0 for every tag
    EvalRoute route = EvalRoute::closed_form;
    std::optional<double> oracle_delta;  // |shipping route - oracle route|
};

// Evaluates one constant by its shipping route (closed form where one is
// defined, kink-split quadrature otherwise). With with_oracle, also runs the
// other route (for quadrature-shipped constants: an unsplit, tighter-budget
// quadrature) and records the absolute difference.
BoundConstants eval_constant(ConstantTag tag, const InequalityParams& P,
                             const QuadratureConfig& cfg = {}, bool with_oracle = false);

const char* constant_tag_name(ConstantTag tag);
std::optional<ConstantTag> constant_tag_from_name(const std::string& name);

}  // namespace hfi
