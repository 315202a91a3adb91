#include <doctest.h>

#include <cmath>

#include "hfi/errors.hpp"
#include "hfi/functions.hpp"
#include "hfi/hadamard.hpp"
#include "hfi/quadrature.hpp"

using namespace hfi;

TEST_SUITE("hadamard") {
    TEST_CASE("constant function has the closed form ln(x/a)^theta / Gamma(theta+1)") {
        auto one = [](double) { return 1.0; };
        for (double theta : {0.3, 0.5, 1.0, 2.5}) {
            const double expect_l = std::pow(std::log(3.0), theta) / std::tgamma(theta + 1.0);
            CHECK(hadamard_left_fn(one, 1.0, 3.0, theta) ==
                  doctest::Approx(expect_l).epsilon(1e-10));
            CHECK(hadamard_right_fn(one, 1.0, 3.0, theta) ==
                  doctest::Approx(expect_l).epsilon(1e-10));
        }
    }

    TEST_CASE("left transform of ln t from a = 1 is ln(x)^(theta+1) / Gamma(theta+2)") {
        auto f = [](double t) { return std::log(t); };
        const double x = std::exp(2.0);
        for (double theta : {0.5, 1.0, 2.5}) {
            const double expect = std::pow(2.0, theta + 1.0) / std::tgamma(theta + 2.0);
            CHECK(hadamard_left_fn(f, 1.0, x, theta) == doctest::Approx(expect).epsilon(1e-10));
        }
    }

    TEST_CASE("right transform of ln(b/t) to b = e is 1 / Gamma(theta+2)") {
        const double b = M_E;
        auto f = [b](double t) { return std::log(b / t); };
        CHECK(hadamard_right_fn(f, 1.0, b, 1.0) == doctest::Approx(0.5).epsilon(1e-10));
        CHECK(hadamard_right_fn(f, 1.0, b, 2.5) ==
              doctest::Approx(1.0 / 11.631728396567449).epsilon(1e-10));
    }

    TEST_CASE("theta = 1 reduces to the plain dt/t integral") {
        auto f = [](double t) { return t * t; };
        const double direct = integrate_fn([](double t) { return t; }, 2.0, 5.0).value;
        CHECK(direct == doctest::Approx(10.5).epsilon(1e-12));
        CHECK(hadamard_left_fn(f, 2.0, 5.0, 1.0) == doctest::Approx(direct).epsilon(1e-10));
        CHECK(hadamard_right_fn(f, 2.0, 5.0, 1.0) == doctest::Approx(direct).epsilon(1e-10));
    }

    TEST_CASE("linearity in the integrand") {
        auto f = [](double t) { return t * t; };
        auto g = [](double t) { return std::log(t); };
        const double ca = 2.5, cb = -1.25;
        auto mix = [&](double t) { return ca * f(t) + cb * g(t); };
        for (double theta : {0.7, 1.9}) {
            const double lhs = hadamard_left_fn(mix, 1.0, 4.0, theta);
            const double rhs = ca * hadamard_left_fn(f, 1.0, 4.0, theta) +
                               cb * hadamard_left_fn(g, 1.0, 4.0, theta);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
        }
    }

    TEST_CASE("non-negative integrands produce non-negative transforms") {
        auto f = [](double t) { return std::exp(t / 4.0); };
        for (double theta : {0.4, 1.0, 3.0}) {
            CHECK(hadamard_left_fn(f, 1.0, 2.0, theta) >= 0.0);
            CHECK(hadamard_right_fn(f, 1.0, 2.0, theta) >= 0.0);
        }
    }

    TEST_CASE("substituted kernel agrees with the raw kernel where the latter is regular") {
        auto f = [](double t) { return std::exp(t / 4.0); };
        const double a = 1.0, x = 2.0;
        for (double theta : {1.2, 2.5}) {
            auto raw = [&](double t) {
                return std::pow(std::log(x / t), theta - 1.0) * f(t) / t;
            };
            const double direct = integrate_fn(raw, a, x).value / std::tgamma(theta);
            CHECK(hadamard_left_fn(f, a, x, theta) == doctest::Approx(direct).epsilon(1e-8));
        }
    }

    TEST_CASE("FunctionSpec entry points route to the same evaluation") {
        const FunctionSpec* sq = find_catalog("u^2");
        REQUIRE(sq != nullptr);
        CHECK(hadamard_left(*sq, 1.0, 4.0, 1.5) == hadamard_left_fn(sq->f, 1.0, 4.0, 1.5));
        CHECK(hadamard_right(*sq, 1.0, 4.0, 1.5) == hadamard_right_fn(sq->f, 1.0, 4.0, 1.5));
        CHECK(hadamard_left(*sq, 1.0, 4.0, 1.5) ==
              doctest::Approx(hadamard_left_fn([](double t) { return t * t; }, 1.0, 4.0, 1.5))
                  .epsilon(1e-13));
    }

    TEST_CASE("rejects degenerate and out-of-contract intervals") {
        auto one = [](double) { return 1.0; };
        CHECK_THROWS_AS(hadamard_left_fn(one, 0.0, 2.0, 1.0), DomainError);
        CHECK_THROWS_AS(hadamard_left_fn(one, -1.0, 2.0, 1.0), DomainError);
        CHECK_THROWS_AS(hadamard_left_fn(one, 2.0, 2.0, 1.0), DomainError);
        CHECK_THROWS_AS(hadamard_left_fn(one, 3.0, 2.0, 1.0), DomainError);
        CHECK_THROWS_AS(hadamard_right_fn(one, 2.0, 1.0, 1.0), DomainError);
        CHECK_THROWS_AS(hadamard_left_fn(one, 1.0, 2.0, 0.0), DomainError);
        CHECK_THROWS_AS(hadamard_left_fn(one, 1.0, 2.0, -0.5), DomainError);
        CHECK_THROWS_AS(hadamard_left_fn(one, 1.0, 2.0, INFINITY), DomainError);
    }
}
