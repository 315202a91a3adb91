#include "hfi/constants.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>

#include "hfi/errors.hpp"
#include "hfi/specfun.hpp"

namespace hfi {

void InequalityParams::validate() const {
    auto fail = [](const std::string& msg) { throw DomainError("InequalityParams: " + msg); };
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(x)) fail("non-finite interval");
    if (!(0.0 < a && a < b)) fail("need 0 < a < b");
    if (!(a <= x && x <= b)) fail("need x in [a, b]");
    if (!(theta > 0.0) || !std::isfinite(theta)) fail("need theta > 0");
    if (!(lambda >= 0.0 && lambda <= 1.0)) fail("need lambda in [0, 1]");
    if (!(alpha > 0.0 && alpha <= 1.0)) fail("need alpha in (0, 1]");
    if (!(m > 0.0 && m <= 1.0)) fail("need m in (0, 1]");
    if (!(q >= 1.0) || !std::isfinite(q)) fail("need q >= 1");
    if (p != 0.0) {
        if (!(p > 1.0) || !std::isfinite(p)) fail("need p > 1 when set");
        if (std::fabs(1.0 / p + 1.0 / q - 1.0) > 1e-12) fail("p, q must be conjugate");
    } else if (q != 1.0) {
        // p = 0 marks the power-mean route, which only exists at q = 1.
        fail("p = 0 requires q = 1");
    }
}

namespace {

void check_theta_lambda(double theta, double lambda, const char* who) {
    if (!(theta > 0.0) || !std::isfinite(theta))
        throw DomainError(std::string(who) + ": need theta > 0");
    if (!(lambda >= 0.0 && lambda <= 1.0))
        throw DomainError(std::string(who) + ": need lambda in [0, 1]");
}

// Integrals containing |t^theta - lambda| are integrated separately on
// [0, t*] and [t*, 1], t* = lambda^(1/theta), so each piece is smooth.
template <class F>
double kink_split(F&& f, double theta, double lambda, const QuadratureConfig& cfg) {
    if (lambda <= 0.0 || lambda >= 1.0) return integrate_fn(f, 0.0, 1.0, cfg).value;
    const double tstar = std::pow(lambda, 1.0 / theta);
    return integrate_fn(f, 0.0, tstar, cfg).value + integrate_fn(f, tstar, 1.0, cfg).value;
}

// Process-wide memo for the quadrature-backed constants. Pure value reuse:
// hits return the bit-identical double a fresh computation would produce.
struct MemoKey {
    int op, k;
    std::array<double, 10> v;
    bool operator<(const MemoKey& o) const {
        if (op != o.op) return op < o.op;
        if (k != o.k) return k < o.k;
        return v < o.v;
    }
};

class Memo {
public:
    template <class F>
    double get(const MemoKey& key, F&& compute) {
        {
            std::shared_lock lock(mu_);
            auto it = map_.find(key);
            if (it != map_.end()) return it->second;
        }
        double value = compute();
        std::unique_lock lock(mu_);
        return map_.emplace(key, value).first->second;
    }

private:
    std::map<MemoKey, double> map_;
    std::shared_mutex mu_;
};

Memo& memo() {
    static Memo m;
    return m;
}

struct RatioWeight {
    double ratio;
    bool weight_up;  // true: t^alpha, false: 1 - t^alpha
};

RatioWeight select_ratio_weight(int k, const InequalityParams& P, const char* who) {
    if (k < 1 || k > 4) throw DomainError(std::string(who) + ": k must be in 1..4");
    return RatioWeight{k <= 2 ? P.x / P.a : P.x / P.b, k % 2 == 1};
}

}  // namespace

double c0(double theta, double lambda) {
    check_theta_lambda(theta, lambda, "c0");
    return (2.0 * theta * std::pow(lambda, 1.0 + 1.0 / theta) + 1.0) / (theta + 1.0) - lambda;
}

double c0_quad(double theta, double lambda, const QuadratureConfig& cfg) {
    check_theta_lambda(theta, lambda, "c0_quad");
    return kink_split([&](double t) { return std::fabs(std::pow(t, theta) - lambda); }, theta,
                      lambda, cfg);
}

double c_k(int k, const InequalityParams& P, const QuadratureConfig& cfg) {
    P.validate();
    const RatioWeight rw = select_ratio_weight(k, P, "c_k");
    const double e = P.q * P.m;
    MemoKey key{0, k, {P.theta, P.lambda, P.alpha, e, rw.ratio, 0, 0, cfg.rel_tol, cfg.abs_tol,
                       double(cfg.max_subdivisions)}};
    return memo().get(key, [&] {
        return kink_split(
            [&](double t) {
                const double w = rw.weight_up ? std::pow(t, P.alpha) : 1.0 - std::pow(t, P.alpha);
                return std::fabs(std::pow(t, P.theta) - P.lambda) * std::pow(rw.ratio, e * t) * w;
            },
            P.theta, P.lambda, cfg);
    });
}

double r0(double theta, double lambda, double p) {
    check_theta_lambda(theta, lambda, "r0");
    if (!(p > 1.0)) throw DomainError("r0: need p > 1");
    if (lambda == 0.0) return 1.0 / (theta * p + 1.0);
    if (lambda == 1.0) return beta(1.0 / theta, p + 1.0) / theta;
    MemoKey key{3, 0, {theta, lambda, p, 0, 0, 0, 0, 0, 0, 0}};
    return memo().get(key, [&] {
        return std::pow(lambda, (theta * p + 1.0) / theta) / theta * beta(1.0 / theta, p + 1.0) +
               std::pow(1.0 - lambda, p + 1.0) / (theta * (p + 1.0)) *
                   hyp2f1(1.0 - 1.0 / theta, 1.0, p + 2.0, 1.0 - lambda);
    });
}

double r0_quad(double theta, double lambda, double p, const QuadratureConfig& cfg) {
    check_theta_lambda(theta, lambda, "r0_quad");
    if (!(p > 1.0)) throw DomainError("r0_quad: need p > 1");
    return kink_split(
        [&](double t) { return std::pow(std::fabs(std::pow(t, theta) - lambda), p); }, theta,
        lambda, cfg);
}

double r_k(int k, const InequalityParams& P, const QuadratureConfig& cfg) {
    P.validate();
    const RatioWeight rw = select_ratio_weight(k, P, "r_k");
    const double e = P.m * P.q;
    MemoKey key{1, k, {P.alpha, e, rw.ratio, 0, 0, 0, 0, cfg.rel_tol, cfg.abs_tol,
                       double(cfg.max_subdivisions)}};
    return memo().get(key, [&] {
        return integrate_fn(
                   [&](double t) {
                       const double w =
                           rw.weight_up ? std::pow(t, P.alpha) : 1.0 - std::pow(t, P.alpha);
                       return std::pow(rw.ratio, e * t) * w;
                   },
                   0.0, 1.0, cfg)
            .value;
    });
}

double t_k(int k, const InequalityParams& P, const QuadratureConfig& cfg) {
    P.validate();
    if (k < 1 || k > 2) throw DomainError("t_k: k must be 1 or 2");
    if (!(P.p > 1.0)) throw DomainError("t_k: need conjugate exponent p > 1");
    const double ratio = k == 1 ? P.x / P.a : P.x / P.b;
    const double e = P.m * P.p;
    MemoKey key{2, k, {P.theta, P.lambda, P.p, e, ratio, 0, 0, cfg.rel_tol, cfg.abs_tol,
                       double(cfg.max_subdivisions)}};
    return memo().get(key, [&] {
        return kink_split(
            [&](double t) {
                return std::pow(std::fabs(std::pow(t, P.theta) - P.lambda), P.p) *
                       std::pow(ratio, e * t);
            },
            P.theta, P.lambda, cfg);
    });
}

namespace {

double v1_closed(double theta, double lambda, double alpha, double q) {
    if (lambda == 0.0) return 1.0 / (theta * q + alpha + 1.0);
    if (lambda == 1.0) return beta((alpha + 1.0) / theta, q + 1.0) / theta;
    return std::pow(lambda, (theta * q + alpha + 1.0) / theta) / theta *
               beta((alpha + 1.0) / theta, q + 1.0) +
           std::pow(1.0 - lambda, q + 1.0) / (theta * (q + 1.0)) *
               hyp2f1(1.0 - (alpha + 1.0) / theta, 1.0, q + 2.0, 1.0 - lambda);
}

double v2_closed(double theta, double lambda, double alpha, double q) {
    if (lambda == 0.0) return 1.0 / (theta * q + 1.0) - 1.0 / (theta * q + alpha + 1.0);
    if (lambda == 1.0)
        return (beta(1.0 / theta, q + 1.0) - beta((alpha + 1.0) / theta, q + 1.0)) / theta;
    return std::pow(lambda, (theta * q + 1.0) / theta) / theta * beta(1.0 / theta, q + 1.0) -
           std::pow(lambda, (theta * q + alpha + 1.0) / theta) / theta *
               beta((alpha + 1.0) / theta, q + 1.0) +
           std::pow(1.0 - lambda, q + 1.0) / (theta * (q + 1.0)) *
               (hyp2f1(1.0 - 1.0 / theta, 1.0, q + 2.0, 1.0 - lambda) -
                hyp2f1(1.0 - (alpha + 1.0) / theta, 1.0, q + 2.0, 1.0 - lambda));
}

}  // namespace

double v12(int which, double theta, double lambda, double alpha, double q) {
    check_theta_lambda(theta, lambda, "v12");
    if (which != 1 && which != 2) throw DomainError("v12: which must be 1 or 2");
    if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("v12: need alpha in (0, 1]");
    if (!(q > 1.0)) throw DomainError("v12: need q > 1");
    MemoKey key{4, which, {theta, lambda, alpha, q, 0, 0, 0, 0, 0, 0}};
    return memo().get(key, [&] {
        return which == 1 ? v1_closed(theta, lambda, alpha, q)
                          : v2_closed(theta, lambda, alpha, q);
    });
}

double v12_quad(int which, double theta, double lambda, double alpha, double q,
                const QuadratureConfig& cfg) {
    check_theta_lambda(theta, lambda, "v12_quad");
    if (which != 1 && which != 2) throw DomainError("v12_quad: which must be 1 or 2");
    return kink_split(
        [&](double t) {
            const double w = which == 1 ? std::pow(t, alpha) : 1.0 - std::pow(t, alpha);
            return std::pow(std::fabs(std::pow(t, theta) - lambda), q) * w;
        },
        theta, lambda, cfg);
}

double v34(int which, const InequalityParams& P) {
    P.validate();
    if (which != 3 && which != 4) throw DomainError("v34: which must be 3 or 4");
    if (!(P.p > 1.0)) throw DomainError("v34: need conjugate exponent p > 1");
    const double ratio = which == 3 ? P.x / P.a : P.x / P.b;
    const double w = P.m * P.p * std::log(ratio);
    if (std::fabs(w) < 1e-8) return 1.0 + w / 2.0 + w * w / 6.0;
    return (std::pow(ratio, P.m * P.p) - 1.0) / w;
}

double v34_quad(int which, const InequalityParams& P, const QuadratureConfig& cfg) {
    P.validate();
    if (which != 3 && which != 4) throw DomainError("v34_quad: which must be 3 or 4");
    const double ratio = which == 3 ? P.x / P.a : P.x / P.b;
    const double e = P.m * P.p;
    return integrate_fn([&](double t) { return std::pow(ratio, e * t); }, 0.0, 1.0, cfg).value;
}

BoundConstants eval_constant(ConstantTag tag, const InequalityParams& P,
                             const QuadratureConfig& cfg, bool with_oracle) {
    BoundConstants out;
    out.tag = tag;
    QuadratureConfig tight = cfg;
    tight.rel_tol = std::min(cfg.rel_tol, 1e-12);
    tight.max_subdivisions = std::max(cfg.max_subdivisions, 4000);

    // Oracle for quadrature-shipped constants: the raw integrand with no kink
    // split, at a tighter budget.
    auto unsplit = [&](auto&& f) { return integrate_fn(f, 0.0, 1.0, tight).value; };

    switch (tag) {
        case ConstantTag::c0:
            out.route = EvalRoute::closed_form;
            out.value = c0(P.theta, P.lambda);
            if (with_oracle) out.oracle_delta = std::fabs(out.value - c0_quad(P.theta, P.lambda, tight));
            return out;
        case ConstantTag::c1:
        case ConstantTag::c2:
        case ConstantTag::c3:
        case ConstantTag::c4: {
            const int k = static_cast<int>(tag) - static_cast<int>(ConstantTag::c1) + 1;
            out.route = EvalRoute::quadrature;
            out.value = c_k(k, P, cfg);
            if (with_oracle) {
                const RatioWeight rw = select_ratio_weight(k, P, "eval_constant");
                const double e = P.q * P.m;
                out.oracle_delta = std::fabs(out.value - unsplit([&](double t) {
                    const double w = rw.weight_up ? std::pow(t, P.alpha) : 1.0 - std::pow(t, P.alpha);
                    return std::fabs(std::pow(t, P.theta) - P.lambda) * std::pow(rw.ratio, e * t) * w;
                }));
            }
            return out;
        }
        case ConstantTag::r0:
            out.route = EvalRoute::closed_form;
            out.value = r0(P.theta, P.lambda, P.p);
            if (with_oracle)
                out.oracle_delta = std::fabs(out.value - r0_quad(P.theta, P.lambda, P.p, tight));
            return out;
        case ConstantTag::r1:
        case ConstantTag::r2:
        case ConstantTag::r3:
        case ConstantTag::r4: {
            const int k = static_cast<int>(tag) - static_cast<int>(ConstantTag::r1) + 1;
            out.route = EvalRoute::quadrature;
            out.value = r_k(k, P, cfg);
            if (with_oracle) {
                const RatioWeight rw = select_ratio_weight(k, P, "eval_constant");
                const double e = P.m * P.q;
                out.oracle_delta = std::fabs(out.value - unsplit([&](double t) {
                    const double w = rw.weight_up ? std::pow(t, P.alpha) : 1.0 - std::pow(t, P.alpha);
                    return std::pow(rw.ratio, e * t) * w;
                }));
            }
            return out;
        }
        case ConstantTag::t1:
        case ConstantTag::t2: {
            const int k = static_cast<int>(tag) - static_cast<int>(ConstantTag::t1) + 1;
            out.route = EvalRoute::quadrature;
            out.value = t_k(k, P, cfg);
            if (with_oracle) {
                const double ratio = k == 1 ? P.x / P.a : P.x / P.b;
                const double e = P.m * P.p;
                out.oracle_delta = std::fabs(out.value - unsplit([&](double t) {
                    return std::pow(std::fabs(std::pow(t, P.theta) - P.lambda), P.p) *
                           std::pow(ratio, e * t);
                }));
            }
            return out;
        }
        case ConstantTag::v1:
        case ConstantTag::v2: {
            const int which = tag == ConstantTag::v1 ? 1 : 2;
            out.route = EvalRoute::closed_form;
            out.value = v12(which, P.theta, P.lambda, P.alpha, P.q);
            if (with_oracle)
                out.oracle_delta = std::fabs(
                    out.value - v12_quad(which, P.theta, P.lambda, P.alpha, P.q, tight));
            return out;
        }
        case ConstantTag::v3:
        case ConstantTag::v4: {
            const int which = tag == ConstantTag::v3 ? 3 : 4;
            out.route = EvalRoute::closed_form;
            out.value = v34(which, P);
            if (with_oracle) out.oracle_delta = std::fabs(out.value - v34_quad(which, P, tight));
            return out;
        }
    }
    throw DomainError("eval_constant: unknown tag");
}

const char* constant_tag_name(ConstantTag tag) {
    switch (tag) {
        case ConstantTag::c0: return "C0";
        case ConstantTag::c1: return "C1";
        case ConstantTag::c2: return "C2";
        case ConstantTag::c3: return "C3";
        case ConstantTag::c4: return "C4";
        case ConstantTag::r0: return "R0";
        case ConstantTag::r1: return "R1";
        case ConstantTag::r2: return "R2";
        case ConstantTag::r3: return "R3";
        case ConstantTag::r4: return "R4";
        case ConstantTag::t1: return "T1";
        case ConstantTag::t2: return "T2";
        case ConstantTag::v1: return "V1";
        case ConstantTag::v2: return "V2";
        case ConstantTag::v3: return "V3";
        case ConstantTag::v4: return "V4";
    }
    return "?";
}

std::optional<ConstantTag> constant_tag_from_name(const std::string& name) {
    std::string up;
    for (char c : name) up += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    static const std::pair<const char*, ConstantTag> table[] = {
        {"C0", ConstantTag::c0}, {"C1", ConstantTag::c1}, {"C2", ConstantTag::c2},
        {"C3", ConstantTag::c3}, {"C4", ConstantTag::c4}, {"R0", ConstantTag::r0},
        {"R1", ConstantTag::r1}, {"R2", ConstantTag::r2}, {"R3", ConstantTag::r3},
        {"R4", ConstantTag::r4}, {"T1", ConstantTag::t1}, {"T2", ConstantTag::t2},
        {"V1", ConstantTag::v1}, {"V2", ConstantTag::v2}, {"V3", ConstantTag::v3},
        {"V4", ConstantTag::v4},
    };
    for (const auto& [n, t] : table)
        if (up == n) return t;
    return std::nullopt;
}

}  // namespace hfi
