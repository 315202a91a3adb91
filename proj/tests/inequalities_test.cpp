#include <doctest.h>

#include <cmath>
#include <string>
#include <utility>

#include "hfi/constants.hpp"
#include "hfi/convexity.hpp"
#include "hfi/errors.hpp"
#include "hfi/functions.hpp"
#include "hfi/hadamard.hpp"
#include "hfi/inequalities.hpp"

using namespace hfi;

namespace {

InequalityParams fixture() {
    InequalityParams P;
    P.a = 1.0;
    P.b = 4.0;
    P.x = 2.0;
    P.theta = 1.5;
    P.lambda = 1.0 / 3.0;
    P.alpha = 0.5;
    P.m = 0.5;
    P.q = 2.0;
    P.p = 2.0;
    return P;
}

const FunctionSpec& square() { return *find_catalog("u^2"); }

ConvexityVerdict certified_screen() {
    ConvexityVerdict v;
    v.certified = true;
    return v;
}

bool contains(const std::string& s, const std::string& frag) {
    return s.find(frag) != std::string::npos;
}

}  // namespace

TEST_SUITE("kf evaluation") {
    TEST_CASE("frozen fixture values on both routes") {
        const InequalityParams P = fixture();
        const KfDecomposition kf = kf_lhs(square(), P);
        CHECK(kf.boundary_term == doctest::Approx(0.88412830725875826).epsilon(1e-10));
        CHECK(kf.fractional_term == doctest::Approx(0.86180914551291292).epsilon(1e-8));
        CHECK(kf.lhs_direct == doctest::Approx(0.022319161745845338).epsilon(1e-6));
        CHECK(std::isnan(kf.rhs_identity));

        const double rhs = kf_rhs_identity(square(), P);
        CHECK(rhs == doctest::Approx(0.022319161745845338).epsilon(1e-10));
        CHECK(std::fabs(kf.lhs_direct - rhs) <= 1e-7 * std::max(1.0, std::fabs(kf.lhs_direct)));

        const auto [ta, tb] = kf_rhs_terms(square(), P);
        CHECK(ta - tb == doctest::Approx(rhs).epsilon(1e-12));
    }

    TEST_CASE("constant functions annihilate the functional at any m") {
        const FunctionSpec c = make_function("3.5", 1e-12, 1e12, "const");
        const InequalityParams P = fixture();  // m = 0.5 exercises the m-weighting
        const KfDecomposition kf = kf_lhs(c, P);
        CHECK(std::fabs(kf.lhs_direct) <= 1e-9 * std::max(1.0, kf.boundary_term));
        CHECK(kf_rhs_identity(c, P) == 0.0);  // ingredient integrands vanish identically
    }

    TEST_CASE("log function at the symmetric midpoint splits into equal terms") {
        const FunctionSpec* lnu = find_catalog("ln(u)");
        REQUIRE(lnu != nullptr);
        InequalityParams P;
        P.a = 1.0;
        P.b = std::exp(2.0);
        P.x = M_E;
        P.theta = 1.0;
        P.lambda = 0.0;
        const auto [ta, tb] = kf_rhs_terms(*lnu, P);
        CHECK(ta == doctest::Approx(0.5).epsilon(1e-10));
        CHECK(tb == doctest::Approx(0.5).epsilon(1e-10));
        CHECK(std::fabs(kf_rhs_identity(*lnu, P)) <= 1e-10);
        CHECK(std::fabs(kf_lhs(*lnu, P).lhs_direct) <= 1e-7);
    }

    TEST_CASE("even functions of ln(u/x) make the two terms exact negatives") {
        const FunctionSpec f = make_function("ln(u/2)^2", 0.1, 100.0, "sq-log");
        InequalityParams P;
        P.a = 1.0;
        P.b = 4.0;
        P.x = 2.0;  // = sqrt(ab), the symmetry point
        P.theta = 1.5;
        P.lambda = 0.25;
        const auto [ta, tb] = kf_rhs_terms(f, P);
        CHECK(ta > 0.0);
        CHECK(ta == doctest::Approx(-tb).epsilon(1e-9));
    }

    TEST_CASE("degenerate x = a and x = b zero out one side exactly") {
        InequalityParams P = fixture();
        P.x = P.a;
        CHECK(kf_rhs_terms(square(), P).first == 0.0);
        CHECK(std::fabs(kf_lhs(square(), P).lhs_direct - kf_rhs_identity(square(), P)) <=
              1e-7 * std::max(1.0, std::fabs(kf_lhs(square(), P).lhs_direct)));
        P.x = P.b;
        CHECK(kf_rhs_terms(square(), P).second == 0.0);
    }
}

TEST_SUITE("hh chain") {
    TEST_CASE("frozen values for the identity function") {
        const FunctionSpec* lin = find_catalog("u");
        REQUIRE(lin != nullptr);
        const auto [l, mid, r] = hh_chain(*lin, 1.0, 4.0, 1.0);
        CHECK(l == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(mid == doctest::Approx(2.1640425613334451).epsilon(1e-10));
        CHECK(r == doctest::Approx(2.5).epsilon(1e-12));
        CHECK(l <= mid);
        CHECK(mid <= r);
    }

    TEST_CASE("ln collapses the chain to equality at every theta") {
        const FunctionSpec* lnu = find_catalog("ln(u)");
        REQUIRE(lnu != nullptr);
        const double expect = std::log(2.0);  // (ln a + ln b)/2 for [1, 4]
        for (double theta : {0.5, 1.0, 2.5}) {
            const auto [l, mid, r] = hh_chain(*lnu, 1.0, 4.0, theta);
            CHECK(l == doctest::Approx(expect).epsilon(1e-9));
            CHECK(mid == doctest::Approx(expect).epsilon(1e-9));
            CHECK(r == doctest::Approx(expect).epsilon(1e-9));
        }
    }

    TEST_CASE("ordering holds for convex catalog functions") {
        for (double theta : {0.5, 1.0, 2.5}) {
            const auto [l, mid, r] = hh_chain(square(), 0.5, 2.0, theta);
            CHECK(l <= mid + 1e-12);
            CHECK(mid <= r + 1e-12);
        }
    }

    TEST_CASE("rejects degenerate intervals and non-positive order") {
        CHECK_THROWS_AS(hh_chain(square(), 4.0, 1.0, 1.0), DomainError);
        CHECK_THROWS_AS(hh_chain(square(), 2.0, 2.0, 1.0), DomainError);
        CHECK_THROWS_AS(hh_chain(square(), 1.0, 4.0, 0.0), DomainError);
    }
}

TEST_SUITE("bounds") {
    TEST_CASE("frozen fixture values dominate the functional") {
        const InequalityParams P = fixture();
        const double k = std::fabs(kf_rhs_identity(square(), P));
        const double b5 = bound_thm5(square(), P);
        const double b6 = bound_thm6(square(), P);
        const double b7 = bound_thm7(square(), P);
        const double b8 = bound_thm8(square(), P);
        CHECK(b5 == doctest::Approx(0.18158490866994256).epsilon(1e-8));
        CHECK(b6 == doctest::Approx(0.21808811280534876).epsilon(1e-8));
        CHECK(b7 == doctest::Approx(0.20737238363602672).epsilon(1e-8));
        CHECK(b8 == doctest::Approx(0.20158344714853445).epsilon(1e-8));
        for (double b : {b5, b6, b7, b8}) CHECK(b >= k);
    }

    TEST_CASE("core assemblers match the convenience overloads exactly") {
        const InequalityParams P = fixture();
        const DerivMagnitudes d = deriv_magnitudes(square(), P);
        CHECK(bound_thm5(P, d) == bound_thm5(square(), P));
        CHECK(bound_thm6(P, d) == bound_thm6(square(), P));
        CHECK(bound_thm7(P, d) == bound_thm7(square(), P));
        CHECK(bound_thm8(P, d) == bound_thm8(square(), P));
    }

    TEST_CASE("power-mean route is continuous at q -> 1+") {
        InequalityParams P1 = fixture();
        P1.q = 1.0;
        P1.p = 0.0;
        InequalityParams P2 = fixture();
        P2.q = 1.0 + 1e-7;
        P2.p = P2.q / (P2.q - 1.0);
        const DerivMagnitudes d = deriv_magnitudes(square(), P1);
        CHECK(bound_thm5(P1, d) == doctest::Approx(bound_thm5(P2, d)).epsilon(1e-4));
    }

    TEST_CASE("derivative magnitudes read off the function") {
        const DerivMagnitudes d = deriv_magnitudes(square(), fixture());
        CHECK(d.at_xm == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-14));  // |f'(x^m)|
        CHECK(d.at_a == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(d.at_b == doctest::Approx(8.0).epsilon(1e-14));
    }

    TEST_CASE("grid supremum of |f'| carries its safety factor") {
        const double M = sup_abs_deriv(square(), 1.0, 4.0);
        CHECK(M >= 8.0);
        CHECK(M == doctest::Approx(8.0).epsilon(1e-8));
        CHECK_THROWS_AS(sup_abs_deriv(square(), 0.0, 4.0), DomainError);
        CHECK_THROWS_AS(sup_abs_deriv(square(), 4.0, 1.0), DomainError);
    }
}

TEST_SUITE("statement metadata") {
    TEST_CASE("names round-trip for all statements and verdicts") {
        for (Statement st : all_statements) {
            const auto back = statement_from_name(statement_name(st));
            REQUIRE(back.has_value());
            CHECK(*back == st);
        }
        CHECK(statement_from_name("thm5") == Statement::thm5);
        CHECK(statement_from_name("remark_19_midpoint_pm") == Statement::remark_19_midpoint_pm);
        CHECK_FALSE(statement_from_name("thm9").has_value());

        for (Verdict v : {Verdict::holds, Verdict::violated, Verdict::skipped_convexity,
                          Verdict::numeric_fail}) {
            const auto back = verdict_from_name(verdict_name(v));
            REQUIRE(back.has_value());
            CHECK(*back == v);
        }
    }

    TEST_CASE("families and q = 1 admissibility") {
        CHECK(statement_family(Statement::lemma2) == 0);
        CHECK(statement_family(Statement::thm4) == 0);
        for (Statement st : {Statement::thm5, Statement::simpson5, Statement::midpoint5,
                             Statement::trapezoid5, Statement::ostrowski5,
                             Statement::remark_19_midpoint_pm})
            CHECK(statement_family(st) == 5);
        CHECK(statement_family(Statement::thm6) == 6);
        CHECK(statement_family(Statement::remark_19_midpoint_holder) == 6);
        CHECK(statement_family(Statement::trapezoid7) == 7);
        CHECK(statement_family(Statement::ostrowski8) == 8);

        for (Statement st : all_statements) {
            const int fam = statement_family(st);
            CHECK(statement_allows_q1(st) == (fam == 0 || fam == 5));
        }
    }

    TEST_CASE("effective parameter pins") {
        InequalityParams base;
        base.a = 1.0;
        base.b = 9.0;
        base.x = 5.0;
        base.theta = 1.5;
        base.lambda = 0.9;
        base.alpha = 0.5;
        base.m = 0.9;
        base.q = 3.0;

        const InequalityParams id = effective_params(Statement::lemma2, base);
        CHECK(id.alpha == 1.0);
        CHECK(id.q == 1.0);
        CHECK(id.p == 0.0);
        CHECK(id.x == 5.0);
        CHECK(id.lambda == 0.9);

        const InequalityParams ch = effective_params(Statement::thm4, base);
        CHECK(ch.x == 3.0);  // sqrt(ab)
        CHECK(ch.lambda == 0.0);
        CHECK(ch.alpha == 1.0);
        CHECK(ch.m == 1.0);
        CHECK(ch.q == 1.0);

        const InequalityParams t5 = effective_params(Statement::thm5, base);
        CHECK(t5.x == 5.0);
        CHECK(t5.lambda == 0.9);
        CHECK(t5.p == doctest::Approx(1.5).epsilon(1e-15));  // conjugate of q = 3

        CHECK(effective_params(Statement::simpson6, base).lambda ==
              doctest::Approx(1.0 / 3.0).epsilon(1e-15));
        CHECK(effective_params(Statement::simpson6, base).x == 3.0);
        CHECK(effective_params(Statement::midpoint7, base).lambda == 0.0);
        CHECK(effective_params(Statement::trapezoid8, base).lambda == 1.0);
        const InequalityParams os = effective_params(Statement::ostrowski8, base);
        CHECK(os.lambda == 0.0);
        CHECK(os.x == 5.0);  // x stays free
        const InequalityParams rm = effective_params(Statement::remark_19_midpoint_pm, base);
        CHECK(rm.theta == 1.0);
        CHECK(rm.m == 1.0);
        CHECK(rm.x == 3.0);
        CHECK(rm.lambda == 0.0);
    }

    TEST_CASE("screening requests and targets") {
        const InequalityParams P = fixture();
        CHECK_FALSE(screening_request(Statement::lemma2, P).needed);

        const ScreenRequest chain = screening_request(Statement::thm4, P);
        CHECK(chain.needed);
        CHECK(chain.on_f);
        CHECK(chain.alpha == 1.0);
        CHECK(chain.m == 1.0);
        CHECK(chain.lo == 1.0);
        CHECK(chain.hi == 4.0);

        const ScreenRequest b = screening_request(Statement::thm5, P);
        CHECK(b.needed);
        CHECK_FALSE(b.on_f);
        CHECK(b.alpha == 0.5);
        CHECK(b.m == 0.5);
        CHECK(b.q == 2.0);
        CHECK(b.lo == 1.0);  // min(a, a^m)
        CHECK(b.hi == 4.0);  // max(b, b^m)

        const FunctionSpec target = screen_target(square(), b);
        CHECK(target.name == "u^2||f'|^2");
        CHECK(target.f(3.0) == doctest::Approx(36.0).epsilon(1e-14));  // |2u|^q at u = 3
    }
}

TEST_SUITE("check_statement") {
    TEST_CASE("identity row: residual against zero with the direct value in the note") {
        InequalityParams base = fixture();
        const InequalityParams P = effective_params(Statement::lemma2, base);
        CHECK(P.alpha == 1.0);
        CHECK(P.q == 1.0);
        const VerificationRecord r = check_statement(Statement::lemma2, square(), P);
        CHECK(r.verdict == Verdict::holds);
        CHECK(r.lhs >= 0.0);
        CHECK(r.lhs <= 1e-9);  // identity residual at the fixture is ~1.5e-12
        CHECK(r.rhs == 0.0);
        CHECK(r.slack == -r.lhs);
        CHECK(r.tol_verdict == doctest::Approx(1e-7).epsilon(1e-12));
        CHECK_FALSE(r.convexity.has_value());
        CHECK(contains(r.note, "lhs_direct=0.02231916"));
    }

    TEST_CASE("chain row: gap encoding with the three values in the note") {
        const FunctionSpec* lin = find_catalog("u");
        REQUIRE(lin != nullptr);
        InequalityParams base;
        base.a = 1.0;
        base.b = 4.0;
        const InequalityParams P = effective_params(Statement::thm4, base);
        const VerificationRecord r = check_statement(Statement::thm4, *lin, P);
        CHECK(r.verdict == Verdict::holds);
        CHECK(r.lhs == doctest::Approx(-0.16404256133344486).epsilon(1e-9));
        CHECK(r.rhs == 0.0);
        CHECK(r.slack == -r.lhs);
        REQUIRE(r.convexity.has_value());
        CHECK(r.convexity->certified);
        CHECK(contains(r.note, "chain=[2,"));
    }

    TEST_CASE("theorem row: screened bound with slack") {
        InequalityParams base;
        base.a = 1.0;
        base.b = 4.0;
        base.x = 2.0;
        base.theta = 1.5;
        base.lambda = 1.0 / 3.0;
        base.alpha = 1.0;
        base.m = 1.0;
        base.q = 2.0;
        const InequalityParams P = effective_params(Statement::thm5, base);
        const VerificationRecord r = check_statement(Statement::thm5, square(), P);
        CHECK(r.verdict == Verdict::holds);
        CHECK(r.slack == doctest::Approx(r.rhs - r.lhs).epsilon(1e-15));
        CHECK(r.slack > 0.0);
        REQUIRE(r.convexity.has_value());
        CHECK(r.convexity->certified);
        CHECK(contains(r.note, "screen_hull=[1,4]"));

        const VerificationRecord again = check_statement(Statement::thm5, square(), P);
        CHECK(again.lhs == r.lhs);
        CHECK(again.rhs == r.rhs);
        CHECK(again.slack == r.slack);
    }

    TEST_CASE("corollary rows scale the parent bound exactly") {
        InequalityParams base;
        base.a = 1.0;
        base.b = 4.0;
        base.theta = 1.5;
        base.lambda = 0.9;  // overwritten by each corollary's pin
        base.alpha = 1.0;
        base.m = 0.9;
        base.q = 2.0;
        const ConvexityVerdict ok = certified_screen();

        struct Row {
            Statement st;
            double lambda;
            double (*bound)(const FunctionSpec&, const InequalityParams&,
                            const QuadratureConfig&);
        };
        const Row rows[] = {
            {Statement::simpson5, 1.0 / 3.0, &bound_thm5},
            {Statement::midpoint6, 0.0, &bound_thm6},
            {Statement::trapezoid7, 1.0, &bound_thm7},
            {Statement::simpson8, 1.0 / 3.0, &bound_thm8},
        };
        for (const Row& row : rows) {
            const InequalityParams P = effective_params(row.st, base);
            CHECK(P.x == 2.0);
            CHECK(P.lambda == doctest::Approx(row.lambda).epsilon(1e-15));
            const VerificationRecord r = check_statement(row.st, square(), P, {}, {}, &ok);
            const double scale = std::pow(2.0, P.theta - 1.0) /
                                 std::pow(P.m * std::log(P.b / P.a), P.theta);
            CHECK(r.lhs == scale * std::fabs(kf_lhs(square(), P).lhs_direct));
            CHECK(r.rhs == scale * row.bound(square(), P, {}));
            CHECK(contains(r.note, "; scale="));

            // The m = 0.9 hypothesis genuinely fails its screening here, so the
            // un-injected run must skip rather than certify.
            const VerificationRecord honest = check_statement(row.st, square(), P);
            CHECK(honest.verdict == Verdict::skipped_convexity);
        }
    }

    TEST_CASE("simpson8 frozen record matches its stated quadrature form") {
        InequalityParams base;
        base.a = 1.0;
        base.b = 4.0;
        base.theta = 1.0;
        base.alpha = 1.0;
        base.m = 1.0;
        base.q = 2.0;
        const InequalityParams P = effective_params(Statement::simpson8, base);
        const VerificationRecord r = check_statement(Statement::simpson8, square(), P);
        CHECK(r.verdict == Verdict::holds);
        CHECK(r.lhs == doctest::Approx(0.089893596666387222).epsilon(1e-9));
        CHECK(r.rhs == doctest::Approx(2.4112671202175536).epsilon(1e-9));
        CHECK(contains(r.note, "screen_hull=[1,4]"));
        CHECK(contains(r.note, "; scale=0.72134752"));

        // Stated form at theta = 1, m = 1: |(f(a) + 4f(x) + f(b))/6 - the
        // averaged fractional pair|, with (f(a) + 4f(x) + f(b))/6 = 5.5 here.
        const double ja = hadamard_right_fn([](double t) { return t * t; }, 1.0, 2.0, 1.0);
        const double jb = hadamard_left_fn([](double t) { return t * t; }, 2.0, 4.0, 1.0);
        const double stated = std::fabs(5.5 - (ja + jb) / (2.0 * std::log(2.0)));
        CHECK(r.lhs == doctest::Approx(stated).epsilon(1e-10));
    }

    TEST_CASE("ostrowski rows synthesize M and keep x free") {
        InequalityParams base;
        base.a = 1.0;
        base.b = 4.0;
        base.x = 2.0;
        base.theta = 1.5;
        base.lambda = 0.7;  // pinned to 0
        base.alpha = 1.0;
        base.m = 1.0;
        base.q = 2.0;
        const double M = sup_abs_deriv(square(), 1.0, 4.0);
        const DerivMagnitudes d{M, M, M};

        const InequalityParams P5 = effective_params(Statement::ostrowski5, base);
        CHECK(P5.lambda == 0.0);
        CHECK(P5.x == 2.0);
        const VerificationRecord r5 = check_statement(Statement::ostrowski5, square(), P5);
        CHECK(r5.verdict == Verdict::holds);
        CHECK(r5.rhs == bound_thm5(P5, d));
        CHECK(contains(r5.note, "; M=8.00000000"));

        const VerificationRecord r6 =
            check_statement(Statement::ostrowski6, square(),
                            effective_params(Statement::ostrowski6, base));
        CHECK(r6.rhs == bound_thm6(effective_params(Statement::ostrowski6, base), d));
        CHECK(contains(r6.note, "m-weighted b-endpoint term retained"));

        const VerificationRecord r7 =
            check_statement(Statement::ostrowski7, square(),
                            effective_params(Statement::ostrowski7, base));
        CHECK(r7.rhs == bound_thm7(effective_params(Statement::ostrowski7, base), d));
        CHECK(contains(r7.note, "endpoint averages kept separate"));
    }

    TEST_CASE("remark rows evaluate their independent stated forms") {
        const FunctionSpec* cube = find_catalog("u^3");
        REQUIRE(cube != nullptr);
        InequalityParams base;
        base.a = 0.5;
        base.b = 2.0;
        base.x = 1.0;
        base.alpha = 0.7;
        base.q = 2.0;
        const ConvexityVerdict ok = certified_screen();

        const InequalityParams Ppm = effective_params(Statement::remark_19_midpoint_pm, base);
        CHECK(Ppm.theta == 1.0);
        CHECK(Ppm.m == 1.0);
        CHECK(Ppm.x == 1.0);
        const VerificationRecord pm =
            check_statement(Statement::remark_19_midpoint_pm, *cube, Ppm, {}, {}, &ok);
        CHECK(pm.verdict == Verdict::holds);
        CHECK(pm.lhs == doctest::Approx(0.89353724116676447).epsilon(1e-9));
        CHECK(pm.rhs == doctest::Approx(2.0244022987211833).epsilon(1e-9));

        const InequalityParams Ph = effective_params(Statement::remark_19_midpoint_holder, base);
        const VerificationRecord ho =
            check_statement(Statement::remark_19_midpoint_holder, *cube, Ph, {}, {}, &ok);
        CHECK(ho.lhs == doctest::Approx(0.89353724116676447).epsilon(1e-9));
        CHECK(ho.rhs == doctest::Approx(2.9826838980225261).epsilon(1e-9));

        // |3u^2|^2 is not (0.7, 1)-GA-convex on [0.5, 2], so the honest screen
        // must skip these rows rather than pass them.
        const VerificationRecord honest =
            check_statement(Statement::remark_19_midpoint_pm, *cube, Ppm);
        CHECK(honest.verdict == Verdict::skipped_convexity);
        CHECK(std::isnan(honest.lhs));
        REQUIRE(honest.convexity.has_value());
        CHECK_FALSE(honest.convexity->certified);
    }

    TEST_CASE("remark rows agree with their pinned midpoint parents at theta = 1") {
        InequalityParams base;
        base.a = 1.0;
        base.b = 4.0;
        base.x = 2.0;
        base.theta = 1.0;
        base.alpha = 1.0;
        base.m = 1.0;
        base.q = 2.0;
        const std::pair<Statement, Statement> pairs[] = {
            {Statement::midpoint5, Statement::remark_19_midpoint_pm},
            {Statement::midpoint6, Statement::remark_19_midpoint_holder},
        };
        for (const auto& [mid, rem] : pairs) {
            const VerificationRecord a = check_statement(mid, square(), effective_params(mid, base));
            const VerificationRecord b = check_statement(rem, square(), effective_params(rem, base));
            CHECK(a.verdict == Verdict::holds);
            CHECK(b.verdict == Verdict::holds);
            CHECK(std::fabs(a.lhs - b.lhs) <= 1e-9 * std::max(1.0, std::fabs(a.lhs)));
            CHECK(std::fabs(a.rhs - b.rhs) <= 1e-9 * std::max(1.0, std::fabs(a.rhs)));
        }
    }

    TEST_CASE("q = 1 outside the power-mean families is reported, not evaluated") {
        InequalityParams base;
        base.a = 1.0;
        base.b = 4.0;
        base.x = 2.0;
        base.q = 1.0;
        const InequalityParams P = effective_params(Statement::thm6, base);
        const VerificationRecord r = check_statement(Statement::thm6, square(), P);
        CHECK(r.verdict == Verdict::numeric_fail);
        CHECK(std::isnan(r.lhs));
        CHECK(r.note == "statement requires q > 1");
    }

    TEST_CASE("quadrature starvation is captured in the record, never thrown") {
        InequalityParams base;
        base.a = 1.0;
        base.b = 4.0;
        base.x = 2.0;
        base.theta = 1.5;
        base.lambda = 1.0 / 3.0;
        base.alpha = 1.0;
        base.m = 1.0;
        base.q = 2.0;
        const InequalityParams P = effective_params(Statement::thm5, base);
        QuadratureConfig strangled;
        strangled.rel_tol = 1e-15;
        strangled.abs_tol = 1e-300;
        strangled.max_subdivisions = 1;
        const VerificationRecord r = check_statement(Statement::thm5, square(), P, strangled);
        CHECK(r.verdict == Verdict::numeric_fail);
        CHECK(std::isnan(r.lhs));
        CHECK(std::isnan(r.rhs));
        CHECK(std::isnan(r.slack));
        CHECK(contains(r.note, "screen_hull=[1,4]"));
        CHECK(contains(r.note, "tolerance unmet"));
    }
}
