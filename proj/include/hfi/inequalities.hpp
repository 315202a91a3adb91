#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "hfi/constants.hpp"
#include "hfi/convexity.hpp"
#include "hfi/functions.hpp"
#include "hfi/quadrature.hpp"

namespace hfi {

// The central functional, for 0 < a <= x <= b, theta > 0, lambda in [0,1],
// m in (0,1]:
//
//   K_f = (1-lambda) m^theta [ln^theta(x/a) + ln^theta(b/x)] f(x^m)
//       + lambda m^theta [f(a^m) ln^theta(x/a) + f(b^m) ln^theta(b/x)]
//       - Gamma(theta+1) [ (1/Gamma(theta)) int_{a^m}^{x^m} (ln(t/a^m))^{theta-1} f(t) dt/t
//                        + (1/Gamma(theta)) int_{x^m}^{b^m} (ln(b^m/t))^{theta-1} f(t) dt/t ]
//
// and, equivalently (the identity this library certifies),
//
//   K_f = m^{theta+1} a^m ln^{theta+1}(x/a) int_0^1 (t^theta - lambda) (x/a)^{mt} f'(x^{mt} a^{m(1-t)}) dt
//       - m^{theta+1} b^m ln^{theta+1}(b/x) int_0^1 (t^theta - lambda) (x/b)^{mt} f'(x^{mt} b^{m(1-t)}) dt.
struct KfDecomposition {
    double lhs_direct = 0.0;      // boundary_term - fractional_term
    double rhs_identity = 0.0;    // two-integral form; NaN when produced by kf_lhs
    double boundary_term = 0.0;
    double fractional_term = 0.0;
};

// Direct evaluation of K_f from its definition (fractional-integral route).
// Degenerate x = a or x = b: the vanished log-term is exactly 0.
KfDecomposition kf_lhs(const FunctionSpec& f, const InequalityParams& P,
                       const QuadratureConfig& cfg = {});

// The identity's two-integral form (derivative route, disjoint code path).
double kf_rhs_identity(const FunctionSpec& f, const InequalityParams& P,
                       const QuadratureConfig& cfg = {});

// The identity's a-side and b-side terms before subtraction (termA - termB =
// kf_rhs_identity); exposed for symmetry diagnostics.
std::pair<double, double> kf_rhs_terms(const FunctionSpec& f, const InequalityParams& P,
                                       const QuadratureConfig& cfg = {});

// Geometric-mean chain for a GA-convex f on [a, b]:
//   f(sqrt(ab)) <= Gamma(theta+1)/(2 ln^theta(b/a)) [J_left + J_right] <= (f(a)+f(b))/2
// returned as {left, middle, right}.
std::array<double, 3> hh_chain(const FunctionSpec& f, double a, double b, double theta,
                               const QuadratureConfig& cfg = {});

// Derivative magnitudes entering the bounds: |f'(x^m)|, |f'(a)|, |f'(b)|.
struct DerivMagnitudes {
    double at_xm = 0.0, at_a = 0.0, at_b = 0.0;
};
DerivMagnitudes deriv_magnitudes(const FunctionSpec& f, const InequalityParams& P);

// Grid supremum of |f'| over [lo, hi] (4096 geometric points, safety factor
// 1 + 1e-9); synthesizes the M of the pointwise-bounded-derivative variants.
double sup_abs_deriv(const FunctionSpec& f, double lo, double hi);

// Right-hand bounds on |K_f|. Each has a core assembler taking explicit
// derivative magnitudes (used by the M-substituted variants) and a
// convenience overload reading them off f.
double bound_thm5(const InequalityParams& P, const DerivMagnitudes& d,
                  const QuadratureConfig& cfg = {});
double bound_thm5(const FunctionSpec& f, const InequalityParams& P,
                  const QuadratureConfig& cfg = {});
double bound_thm6(const InequalityParams& P, const DerivMagnitudes& d,
                  const QuadratureConfig& cfg = {});
double bound_thm6(const FunctionSpec& f, const InequalityParams& P,
                  const QuadratureConfig& cfg = {});
double bound_thm7(const InequalityParams& P, const DerivMagnitudes& d,
                  const QuadratureConfig& cfg = {});
double bound_thm7(const FunctionSpec& f, const InequalityParams& P,
                  const QuadratureConfig& cfg = {});
double bound_thm8(const InequalityParams& P, const DerivMagnitudes& d,
                  const QuadratureConfig& cfg = {});
double bound_thm8(const FunctionSpec& f, const InequalityParams& P,
                  const QuadratureConfig& cfg = {});

// Everything the library can check. thm5..thm8 bound |K_f| directly; the
// simpson/midpoint/trapezoid rows pin x = sqrt(ab) and lambda = 1/3, 0, 1;
// the ostrowski rows pin lambda = 0 and replace derivative magnitudes by a
// synthesized sup bound M; the remark rows are independent theta = 1, m = 1
// reductions of midpoint5/midpoint6 coded directly from their stated form.
enum class Statement {
    lemma2,
    thm4,
    thm5,
    thm6,
    thm7,
    thm8,
    simpson5,
    simpson6,
    simpson7,
    simpson8,
    midpoint5,
    midpoint6,
    midpoint7,
    midpoint8,
    trapezoid5,
    trapezoid6,
    trapezoid7,
    trapezoid8,
    ostrowski5,
    ostrowski6,
    ostrowski7,
    ostrowski8,
    remark_19_midpoint_pm,
    remark_19_midpoint_holder,
};
inline constexpr int statement_count = 24;
inline constexpr std::array<Statement, statement_count> all_statements = {
    Statement::lemma2,        Statement::thm4,
    Statement::thm5,          Statement::thm6,
    Statement::thm7,          Statement::thm8,
    Statement::simpson5,      Statement::simpson6,
    Statement::simpson7,      Statement::simpson8,
    Statement::midpoint5,     Statement::midpoint6,
    Statement::midpoint7,     Statement::midpoint8,
    Statement::trapezoid5,    Statement::trapezoid6,
    Statement::trapezoid7,    Statement::trapezoid8,
    Statement::ostrowski5,    Statement::ostrowski6,
    Statement::ostrowski7,    Statement::ostrowski8,
    Statement::remark_19_midpoint_pm, Statement::remark_19_midpoint_holder,
};

const char* statement_name(Statement st);
std::optional<Statement> statement_from_name(const std::string& name);

// Family 5..8 names the bound whose constants a statement uses (remark_pm
// uses the C-family, remark_holder the R-family); 0 for lemma2 and thm4.
int statement_family(Statement st);

// q = 1 is admissible only where the power-mean route applies (the C-family
// and the two statements that pin q's role away entirely).
bool statement_allows_q1(Statement st);

enum class Verdict { holds, violated, skipped_convexity, numeric_fail };
const char* verdict_name(Verdict v);
std::optional<Verdict> verdict_from_name(const std::string& name);

struct ToleranceSet {
    double verdict_rel = 1e-7;  // bound comparisons: tol = max(abs, rel*|rhs|)
    double verdict_abs = 1e-9;
    double lemma_rel = 1e-7;    // identity residual: tol = lemma_rel*max(1,|lhs_direct|)
};

struct VerificationRecord {
    std::string function_name;
    InequalityParams params;  // effective (pinned) parameters
    Statement statement = Statement::lemma2;
    double lhs = 0.0;    // residual (identity/chain rows) or scaled |K_f|
    double rhs = 0.0;    // 0 (identity/chain rows) or the scaled bound
    double slack = 0.0;  // rhs - lhs, recorded even when violated
    Verdict verdict = Verdict::holds;
    std::optional<ConvexityVerdict> convexity;
    double tol_verdict = 0.0;
    std::string note;
};

// What a statement requires to be screened before its bound applies.
struct ScreenRequest {
    bool needed = false;
    bool on_f = false;  // true: screen f itself (alpha = m = 1); false: |f'|^q
    double alpha = 1.0, m = 1.0, q = 1.0;
    double lo = 0.0, hi = 0.0;  // screening hull
};
ScreenRequest screening_request(Statement st, const InequalityParams& P);

// The function handed to the convexity checker for a given request:
// f itself, or u -> |f'(u)|^q.
FunctionSpec screen_target(const FunctionSpec& f, const ScreenRequest& req);

// Applies a statement's parameter pins to a base tuple (corollaries fix x
// and lambda, remarks also theta = 1 and m = 1, the identity and chain rows
// normalize the axes they ignore) and derives p from q.
InequalityParams effective_params(Statement st, const InequalityParams& base);

// Evaluates one statement at one (already pinned) parameter tuple. A
// pre-computed screening verdict may be passed to skip re-screening;
// otherwise screening runs internally with the given grid density and
// tolerance. Numeric failures are captured in the record, never thrown.
VerificationRecord check_statement(Statement st, const FunctionSpec& f,
                                   const InequalityParams& P, const QuadratureConfig& quad = {},
                                   const ToleranceSet& tols = {},
                                   const ConvexityVerdict* screen = nullptr,
                                   int screen_grid_n = 32, double screen_tol = 1e-9);

}  // namespace hfi
