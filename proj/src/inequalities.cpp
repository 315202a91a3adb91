#include "hfi/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "hfi/errors.hpp"
#include "hfi/format.hpp"
#include "hfi/hadamard.hpp"
#include "hfi/specfun.hpp"

namespace hfi {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// K_f evaluations recur across statements sharing a parameter tuple (the
// four bound families and their corollaries); memoize the direct route.
struct KfKey {
    std::string fn;
    std::array<double, 9> v;
    bool operator<(const KfKey& o) const {
        if (fn != o.fn) return fn < o.fn;
        return v < o.v;
    }
};

class KfMemo {
public:
    template <class F>
    KfDecomposition get(const KfKey& key, F&& compute) {
        {
            std::shared_lock lock(mu_);
            auto it = map_.find(key);
            if (it != map_.end()) return it->second;
        }
        KfDecomposition value = compute();
        std::unique_lock lock(mu_);
        return map_.emplace(key, value).first->second;
    }

private:
    std::map<KfKey, KfDecomposition> map_;
    std::shared_mutex mu_;
};

KfMemo& kf_memo() {
    static KfMemo m;
    return m;
}

enum class Kind { identity, chain, theorem, simpson, midpoint, trapezoid, ostrowski, remark };

Kind statement_kind(Statement st) {
    switch (st) {
        case Statement::lemma2: return Kind::identity;
        case Statement::thm4: return Kind::chain;
        case Statement::thm5:
        case Statement::thm6:
        case Statement::thm7:
        case Statement::thm8: return Kind::theorem;
        case Statement::simpson5:
        case Statement::simpson6:
        case Statement::simpson7:
        case Statement::simpson8: return Kind::simpson;
        case Statement::midpoint5:
        case Statement::midpoint6:
        case Statement::midpoint7:
        case Statement::midpoint8: return Kind::midpoint;
        case Statement::trapezoid5:
        case Statement::trapezoid6:
        case Statement::trapezoid7:
        case Statement::trapezoid8: return Kind::trapezoid;
        case Statement::ostrowski5:
        case Statement::ostrowski6:
        case Statement::ostrowski7:
        case Statement::ostrowski8: return Kind::ostrowski;
        case Statement::remark_19_midpoint_pm:
        case Statement::remark_19_midpoint_holder: return Kind::remark;
    }
    throw DomainError("statement_kind: unknown statement");
}

double bound_by_family(int family, const InequalityParams& P, const DerivMagnitudes& d,
                       const QuadratureConfig& cfg) {
    switch (family) {
        case 5: return bound_thm5(P, d, cfg);
        case 6: return bound_thm6(P, d, cfg);
        case 7: return bound_thm7(P, d, cfg);
        case 8: return bound_thm8(P, d, cfg);
    }
    throw DomainError("bound_by_family: no bound for this statement");
}

// Independent reductions at theta = 1, m = 1, x = sqrt(ab), lambda = 0,
// coded directly from their stated form: plain [0,1] quadratures of
// t-weighted ratio powers, no shared kernel or constants machinery.
double remark_lhs(const FunctionSpec& f, double a, double b, const QuadratureConfig& cfg) {
    const double mid = f.f(std::sqrt(a * b));
    const double mean =
        integrate_fn([&](double t) { return f.f(t) / t; }, a, b, cfg).value / std::log(b / a);
    return std::fabs(mid - mean);
}

double remark_rhs(Statement st, const FunctionSpec& f, const InequalityParams& P,
                  const QuadratureConfig& cfg) {
    const double x = std::sqrt(P.a * P.b);
    const double ra = x / P.a, rb = x / P.b;
    const double dx = std::fabs(f.df(x));
    const double da = std::fabs(f.df(P.a));
    const double db = std::fabs(f.df(P.b));
    const double q = P.q, alpha = P.alpha;
    const bool with_t = st == Statement::remark_19_midpoint_pm;  // extra factor t in the weight
    auto piece = [&](double ratio, bool up) {
        return integrate_fn(
                   [&](double t) {
                       const double w = up ? std::pow(t, alpha) : 1.0 - std::pow(t, alpha);
                       return (with_t ? t : 1.0) * w * std::pow(ratio, q * t);
                   },
                   0.0, 1.0, cfg)
            .value;
    };
    const double bra = std::pow(dx, q) * piece(ra, true) + std::pow(da, q) * piece(ra, false);
    const double brb = std::pow(dx, q) * piece(rb, true) + std::pow(db, q) * piece(rb, false);
    const double sum = P.a * std::pow(bra, 1.0 / q) + P.b * std::pow(brb, 1.0 / q);
    if (with_t) return std::log(P.b / P.a) * std::pow(0.5, 3.0 - 1.0 / q) * sum;
    if (!(q > 1.0)) throw DomainError("remark_19_midpoint_holder: need q > 1");
    return std::log(P.b / P.a) / 4.0 * std::pow((q - 1.0) / (2.0 * q - 1.0), 1.0 - 1.0 / q) * sum;
}

}  // namespace

KfDecomposition kf_lhs(const FunctionSpec& f, const InequalityParams& P,
                       const QuadratureConfig& cfg) {
    P.validate();
    KfKey key{f.key(),
              {P.a, P.b, P.x, P.theta, P.lambda, P.m, cfg.rel_tol, cfg.abs_tol,
               double(cfg.max_subdivisions)}};
    return kf_memo().get(key, [&] {
        const double am = std::pow(P.a, P.m), bm = std::pow(P.b, P.m), xm = std::pow(P.x, P.m);
        const double La = std::log(P.x / P.a), Lb = std::log(P.b / P.x);
        const double mth = std::pow(P.m, P.theta);
        const double wa = P.x > P.a ? std::pow(La, P.theta) : 0.0;
        const double wb = P.x < P.b ? std::pow(Lb, P.theta) : 0.0;

        KfDecomposition out;
        out.boundary_term = (1.0 - P.lambda) * mth * (wa + wb) * f.f(xm) +
                            P.lambda * mth * (f.f(am) * wa + f.f(bm) * wb);
        const double j_a = P.x > P.a ? hadamard_right_fn(f.f, am, xm, P.theta, cfg) : 0.0;
        const double j_b = P.x < P.b ? hadamard_left_fn(f.f, xm, bm, P.theta, cfg) : 0.0;
        out.fractional_term = gamma(P.theta + 1.0) * (j_a + j_b);
        out.lhs_direct = out.boundary_term - out.fractional_term;
        out.rhs_identity = kNaN;
        return out;
    });
}

std::pair<double, double> kf_rhs_terms(const FunctionSpec& f, const InequalityParams& P,
                                       const QuadratureConfig& cfg) {
    P.validate();
    const double la = std::log(P.a), lb = std::log(P.b), lx = std::log(P.x);
    const double La = lx - la, Lb = lb - lx;
    const double coeff = std::pow(P.m, P.theta + 1.0);
    double term_a = 0.0, term_b = 0.0;
    if (P.x > P.a) {
        const double ia =
            integrate_fn(
                [&](double t) {
                    return (std::pow(t, P.theta) - P.lambda) * std::exp(P.m * t * La) *
                           f.df(std::exp(P.m * (t * lx + (1.0 - t) * la)));
                },
                0.0, 1.0, cfg)
                .value;
        term_a = coeff * std::pow(P.a, P.m) * std::pow(La, P.theta + 1.0) * ia;
    }
    if (P.x < P.b) {
        const double ib =
            integrate_fn(
                [&](double t) {
                    return (std::pow(t, P.theta) - P.lambda) * std::exp(-P.m * t * Lb) *
                           f.df(std::exp(P.m * (t * lx + (1.0 - t) * lb)));
                },
                0.0, 1.0, cfg)
                .value;
        term_b = coeff * std::pow(P.b, P.m) * std::pow(Lb, P.theta + 1.0) * ib;
    }
    return {term_a, term_b};
}

double kf_rhs_identity(const FunctionSpec& f, const InequalityParams& P,
                       const QuadratureConfig& cfg) {
    auto [ta, tb] = kf_rhs_terms(f, P, cfg);
    return ta - tb;
}

std::array<double, 3> hh_chain(const FunctionSpec& f, double a, double b, double theta,
                               const QuadratureConfig& cfg) {
    if (!(0.0 < a && a < b)) throw DomainError("hh_chain: need 0 < a < b");
    if (!(theta > 0.0)) throw DomainError("hh_chain: need theta > 0");
    const double left = f.f(std::sqrt(a * b));
    const double j_sum = hadamard_left(f, a, b, theta, cfg) + hadamard_right(f, a, b, theta, cfg);
    const double middle =
        gamma(theta + 1.0) / (2.0 * std::pow(std::log(b / a), theta)) * j_sum;
    const double right = 0.5 * (f.f(a) + f.f(b));
    return {left, middle, right};
}

DerivMagnitudes deriv_magnitudes(const FunctionSpec& f, const InequalityParams& P) {
    return {std::fabs(f.df(std::pow(P.x, P.m))), std::fabs(f.df(P.a)), std::fabs(f.df(P.b))};
}

double sup_abs_deriv(const FunctionSpec& f, double lo, double hi) {
    if (!(0.0 < lo && lo <= hi)) throw DomainError("sup_abs_deriv: need 0 < lo <= hi");
    constexpr int n = 4096;
    const double llo = std::log(lo), lhi = std::log(hi);
    double best = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = std::exp(llo + (lhi - llo) * i / (n - 1));
        best = std::max(best, std::fabs(f.df(u)));
    }
    return best * (1.0 + 1e-9);
}

double bound_thm5(const InequalityParams& P, const DerivMagnitudes& d,
                  const QuadratureConfig& cfg) {
    P.validate();
    const double q = P.q;
    // The c0 factor carries exponent 1 - 1/q, exactly 0 at q = 1.
    const double pref = std::pow(P.m, P.theta + 1.0) *
                        (q > 1.0 ? std::pow(c0(P.theta, P.lambda), 1.0 - 1.0 / q) : 1.0);
    double sum = 0.0;
    if (P.x > P.a) {
        const double br =
            std::pow(d.at_xm, q) * c_k(1, P, cfg) + P.m * std::pow(d.at_a, q) * c_k(2, P, cfg);
        sum += std::pow(P.a, P.m) * std::pow(std::log(P.x / P.a), P.theta + 1.0) *
               std::pow(br, 1.0 / q);
    }
    if (P.x < P.b) {
        const double br =
            std::pow(d.at_xm, q) * c_k(3, P, cfg) + P.m * std::pow(d.at_b, q) * c_k(4, P, cfg);
        sum += std::pow(P.b, P.m) * std::pow(std::log(P.b / P.x), P.theta + 1.0) *
               std::pow(br, 1.0 / q);
    }
    return pref * sum;
}

double bound_thm6(const InequalityParams& P, const DerivMagnitudes& d,
                  const QuadratureConfig& cfg) {
    P.validate();
    if (!(P.p > 1.0)) throw DomainError("bound_thm6: need conjugate exponent p > 1");
    const double q = P.q;
    const double pref =
        std::pow(P.m, P.theta + 1.0) * std::pow(r0(P.theta, P.lambda, P.p), 1.0 / P.p);
    double sum = 0.0;
    if (P.x > P.a) {
        const double br =
            std::pow(d.at_xm, q) * r_k(1, P, cfg) + P.m * std::pow(d.at_a, q) * r_k(2, P, cfg);
        sum += std::pow(P.a, P.m) * std::pow(std::log(P.x / P.a), P.theta + 1.0) *
               std::pow(br, 1.0 / q);
    }
    if (P.x < P.b) {
        const double br =
            std::pow(d.at_xm, q) * r_k(3, P, cfg) + P.m * std::pow(d.at_b, q) * r_k(4, P, cfg);
        sum += std::pow(P.b, P.m) * std::pow(std::log(P.b / P.x), P.theta + 1.0) *
               std::pow(br, 1.0 / q);
    }
    return pref * sum;
}

double bound_thm7(const InequalityParams& P, const DerivMagnitudes& d,
                  const QuadratureConfig& cfg) {
    P.validate();
    if (!(P.p > 1.0)) throw DomainError("bound_thm7: need conjugate exponent p > 1");
    const double q = P.q;
    const double pref = std::pow(P.m, P.theta + 1.0);
    double sum = 0.0;
    if (P.x > P.a) {
        const double avg =
            (std::pow(d.at_xm, q) + P.m * P.alpha * std::pow(d.at_a, q)) / (P.alpha + 1.0);
        sum += std::pow(P.a, P.m) * std::pow(std::log(P.x / P.a), P.theta + 1.0) *
               std::pow(t_k(1, P, cfg), 1.0 / P.p) * std::pow(avg, 1.0 / q);
    }
    if (P.x < P.b) {
        const double avg =
            (std::pow(d.at_xm, q) + P.m * P.alpha * std::pow(d.at_b, q)) / (P.alpha + 1.0);
        sum += std::pow(P.b, P.m) * std::pow(std::log(P.b / P.x), P.theta + 1.0) *
               std::pow(t_k(2, P, cfg), 1.0 / P.p) * std::pow(avg, 1.0 / q);
    }
    return pref * sum;
}

double bound_thm8(const InequalityParams& P, const DerivMagnitudes& d,
                  const QuadratureConfig& cfg) {
    (void)cfg;  // every constant here has a closed form
    P.validate();
    if (!(P.p > 1.0)) throw DomainError("bound_thm8: need conjugate exponent p > 1");
    const double q = P.q;
    const double v1 = v12(1, P.theta, P.lambda, P.alpha, q);
    const double v2 = v12(2, P.theta, P.lambda, P.alpha, q);
    const double pref = std::pow(P.m, P.theta + 1.0);
    double sum = 0.0;
    if (P.x > P.a) {
        const double br = v1 * std::pow(d.at_xm, q) + P.m * v2 * std::pow(d.at_a, q);
        sum += std::pow(P.a, P.m) * std::pow(std::log(P.x / P.a), P.theta + 1.0) *
               std::pow(v34(3, P), 1.0 / P.p) * std::pow(br, 1.0 / q);
    }
    if (P.x < P.b) {
        const double br = v1 * std::pow(d.at_xm, q) + P.m * v2 * std::pow(d.at_b, q);
        sum += std::pow(P.b, P.m) * std::pow(std::log(P.b / P.x), P.theta + 1.0) *
               std::pow(v34(4, P), 1.0 / P.p) * std::pow(br, 1.0 / q);
    }
    return pref * sum;
}

double bound_thm5(const FunctionSpec& f, const InequalityParams& P, const QuadratureConfig& cfg) {
    return bound_thm5(P, deriv_magnitudes(f, P), cfg);
}
double bound_thm6(const FunctionSpec& f, const InequalityParams& P, const QuadratureConfig& cfg) {
    return bound_thm6(P, deriv_magnitudes(f, P), cfg);
}
double bound_thm7(const FunctionSpec& f, const InequalityParams& P, const QuadratureConfig& cfg) {
    return bound_thm7(P, deriv_magnitudes(f, P), cfg);
}
double bound_thm8(const FunctionSpec& f, const InequalityParams& P, const QuadratureConfig& cfg) {
    return bound_thm8(P, deriv_magnitudes(f, P), cfg);
}

const char* statement_name(Statement st) {
    switch (st) {
        case Statement::lemma2: return "lemma2";
        case Statement::thm4: return "thm4";
        case Statement::thm5: return "thm5";
        case Statement::thm6: return "thm6";
        case Statement::thm7: return "thm7";
        case Statement::thm8: return "thm8";
        case Statement::simpson5: return "simpson5";
        case Statement::simpson6: return "simpson6";
        case Statement::simpson7: return "simpson7";
        case Statement::simpson8: return "simpson8";
        case Statement::midpoint5: return "midpoint5";
        case Statement::midpoint6: return "midpoint6";
        case Statement::midpoint7: return "midpoint7";
        case Statement::midpoint8: return "midpoint8";
        case Statement::trapezoid5: return "trapezoid5";
        case Statement::trapezoid6: return "trapezoid6";
        case Statement::trapezoid7: return "trapezoid7";
        case Statement::trapezoid8: return "trapezoid8";
        case Statement::ostrowski5: return "ostrowski5";
        case Statement::ostrowski6: return "ostrowski6";
        case Statement::ostrowski7: return "ostrowski7";
        case Statement::ostrowski8: return "ostrowski8";
        case Statement::remark_19_midpoint_pm: return "remark_19_midpoint_pm";
        case Statement::remark_19_midpoint_holder: return "remark_19_midpoint_holder";
    }
    return "?";
}

std::optional<Statement> statement_from_name(const std::string& name) {
    for (Statement st : all_statements)
        if (name == statement_name(st)) return st;
    return std::nullopt;
}

int statement_family(Statement st) {
    switch (st) {
        case Statement::lemma2:
        case Statement::thm4: return 0;
        case Statement::thm5:
        case Statement::simpson5:
        case Statement::midpoint5:
        case Statement::trapezoid5:
        case Statement::ostrowski5:
        case Statement::remark_19_midpoint_pm: return 5;
        case Statement::thm6:
        case Statement::simpson6:
        case Statement::midpoint6:
        case Statement::trapezoid6:
        case Statement::ostrowski6:
        case Statement::remark_19_midpoint_holder: return 6;
        case Statement::thm7:
        case Statement::simpson7:
        case Statement::midpoint7:
        case Statement::trapezoid7:
        case Statement::ostrowski7: return 7;
        case Statement::thm8:
        case Statement::simpson8:
        case Statement::midpoint8:
        case Statement::trapezoid8:
        case Statement::ostrowski8: return 8;
    }
    return 0;
}

bool statement_allows_q1(Statement st) {
    const int fam = statement_family(st);
    return fam == 0 || fam == 5;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::violated: return "violated";
        case Verdict::skipped_convexity: return "skipped_convexity";
        case Verdict::numeric_fail: return "numeric_fail";
    }
    return "?";
}

std::optional<Verdict> verdict_from_name(const std::string& name) {
    for (Verdict v : {Verdict::holds, Verdict::violated, Verdict::skipped_convexity,
                      Verdict::numeric_fail})
        if (name == verdict_name(v)) return v;
    return std::nullopt;
}

ScreenRequest screening_request(Statement st, const InequalityParams& P) {
    ScreenRequest r;
    switch (statement_kind(st)) {
        case Kind::identity:
            return r;  // the identity needs only differentiability
        case Kind::chain:
            r.needed = true;
            r.on_f = true;
            r.alpha = r.m = r.q = 1.0;
            r.lo = P.a;
            r.hi = P.b;
            return r;
        default:
            r.needed = true;
            r.on_f = false;
            r.alpha = P.alpha;
            r.m = P.m;
            r.q = P.q;
            r.lo = std::min(P.a, std::pow(P.a, P.m));
            r.hi = std::max(P.b, std::pow(P.b, P.m));
            return r;
    }
}

FunctionSpec screen_target(const FunctionSpec& f, const ScreenRequest& req) {
    if (req.on_f) return f;
    FunctionSpec g;
    g.name = f.name + "||f'|^" + format_double(req.q);
    g.source = f.source;
    g.f = [df = f.df, q = req.q](double u) { return std::pow(std::fabs(df(u)), q); };
    g.domain_lo = f.domain_lo;
    g.domain_hi = f.domain_hi;
    return g;
}

InequalityParams effective_params(Statement st, const InequalityParams& base) {
    InequalityParams P = base;
    const double geo_mid = std::sqrt(base.a * base.b);
    switch (statement_kind(st)) {
        case Kind::identity:
            P.alpha = 1.0;
            P.q = 1.0;
            break;
        case Kind::chain:
            P.x = geo_mid;
            P.lambda = 0.0;
            P.alpha = 1.0;
            P.m = 1.0;
            P.q = 1.0;
            break;
        case Kind::theorem:
            break;
        case Kind::simpson:
            P.x = geo_mid;
            P.lambda = 1.0 / 3.0;
            break;
        case Kind::midpoint:
            P.x = geo_mid;
            P.lambda = 0.0;
            break;
        case Kind::trapezoid:
            P.x = geo_mid;
            P.lambda = 1.0;
            break;
        case Kind::ostrowski:
            P.lambda = 0.0;
            break;
        case Kind::remark:
            P.theta = 1.0;
            P.m = 1.0;
            P.x = geo_mid;
            P.lambda = 0.0;
            break;
    }
    P.p = P.q > 1.0 ? P.q / (P.q - 1.0) : 0.0;
    return P;
}

VerificationRecord check_statement(Statement st, const FunctionSpec& f,
                                   const InequalityParams& P, const QuadratureConfig& quad,
                                   const ToleranceSet& tols, const ConvexityVerdict* screen,
                                   int screen_grid_n, double screen_tol) {
    VerificationRecord rec;
    rec.function_name = f.name;
    rec.params = P;
    rec.statement = st;
    rec.lhs = rec.rhs = rec.slack = kNaN;

    try {
        P.validate();
        if (!statement_allows_q1(st) && !(P.q > 1.0))
            throw DomainError("statement requires q > 1");

        const ScreenRequest req = screening_request(st, P);
        if (req.needed) {
            rec.note = "screen_hull=[" + format_double(req.lo) + "," + format_double(req.hi) + "]";
            const ConvexityVerdict cv =
                screen ? *screen
                       : check_alpha_m_ga(screen_target(f, req), req.alpha, req.m, req.lo, req.hi,
                                          screen_grid_n, screen_tol);
            rec.convexity = cv;
            if (!cv.certified) {
                rec.verdict = Verdict::skipped_convexity;
                return rec;
            }
        }

        const Kind kind = statement_kind(st);
        const int family = statement_family(st);
        switch (kind) {
            case Kind::identity: {
                KfDecomposition kd = kf_lhs(f, P, quad);
                kd.rhs_identity = kf_rhs_identity(f, P, quad);
                rec.lhs = std::fabs(kd.lhs_direct - kd.rhs_identity);
                rec.rhs = 0.0;
                rec.tol_verdict = tols.lemma_rel * std::max(1.0, std::fabs(kd.lhs_direct));
                rec.note = "lhs_direct=" + format_double(kd.lhs_direct);
                break;
            }
            case Kind::chain: {
                const auto chain = hh_chain(f, P.a, P.b, P.theta, quad);
                rec.lhs = std::max(chain[0] - chain[1], chain[1] - chain[2]);
                rec.rhs = 0.0;
                rec.tol_verdict =
                    tols.verdict_abs * std::max({1.0, std::fabs(chain[0]), std::fabs(chain[1]),
                                                 std::fabs(chain[2])});
                rec.note = "chain=[" + format_double(chain[0]) + "," + format_double(chain[1]) +
                           "," + format_double(chain[2]) + "]";
                break;
            }
            case Kind::theorem: {
                rec.lhs = std::fabs(kf_lhs(f, P, quad).lhs_direct);
                rec.rhs = bound_by_family(family, P, deriv_magnitudes(f, P), quad);
                rec.tol_verdict = std::max(tols.verdict_abs, tols.verdict_rel * std::fabs(rec.rhs));
                break;
            }
            case Kind::simpson:
            case Kind::midpoint:
            case Kind::trapezoid: {
                const double scale = std::pow(2.0, P.theta - 1.0) /
                                     std::pow(P.m * std::log(P.b / P.a), P.theta);
                rec.lhs = scale * std::fabs(kf_lhs(f, P, quad).lhs_direct);
                rec.rhs = scale * bound_by_family(family, P, deriv_magnitudes(f, P), quad);
                rec.tol_verdict = std::max(tols.verdict_abs, tols.verdict_rel * std::fabs(rec.rhs));
                rec.note += "; scale=" + format_double(scale);
                break;
            }
            case Kind::ostrowski: {
                const ScreenRequest hull = screening_request(st, P);
                const double M = sup_abs_deriv(f, hull.lo, hull.hi);
                const double scale = std::pow(P.m, -P.theta);
                rec.lhs = scale * std::fabs(kf_lhs(f, P, quad).lhs_direct);
                rec.rhs = scale * bound_by_family(family, P, DerivMagnitudes{M, M, M}, quad);
                rec.tol_verdict = std::max(tols.verdict_abs, tols.verdict_rel * std::fabs(rec.rhs));
                rec.note += "; M=" + format_double(M);
                if (st == Statement::ostrowski6)
                    rec.note += "; m-weighted b-endpoint term retained";
                if (st == Statement::ostrowski7)
                    rec.note += "; endpoint averages kept separate";
                break;
            }
            case Kind::remark: {
                if (P.theta != 1.0 || P.m != 1.0)
                    throw DomainError("remark statements require theta = 1 and m = 1");
                rec.lhs = remark_lhs(f, P.a, P.b, quad);
                rec.rhs = remark_rhs(st, f, P, quad);
                rec.tol_verdict = std::max(tols.verdict_abs, tols.verdict_rel * std::fabs(rec.rhs));
                break;
            }
        }
        rec.slack = rec.rhs - rec.lhs;
        rec.verdict = rec.lhs <= rec.rhs + rec.tol_verdict ? Verdict::holds : Verdict::violated;
    } catch (const std::exception& e) {
        rec.verdict = Verdict::numeric_fail;
        rec.lhs = rec.rhs = rec.slack = kNaN;
        rec.note = rec.note.empty() ? e.what() : rec.note + "; " + e.what();
    }
    return rec;
}

}  // namespace hfi
