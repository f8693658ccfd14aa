#include <cmath>

#include <doctest.h>

#include "hhmc/convexity.hpp"
#include "hhmc/errors.hpp"

using namespace hhmc;

TEST_SUITE("convexity") {

TEST_CASE("square function is convex") {
    const auto r = check_m_convex(power_fn(2.0, 1.0), 1.0, 1.0);
    CHECK(r.holds);
    CHECK_FALSE(r.witness.has_value());
    CHECK(r.target == ConvexityTarget::F);
    CHECK(r.samples_checked == 48L * 48 * 48 + 10000);
}

TEST_CASE("shifted square fails m-convexity with the origin witness") {
    // u^2 + 1 at m = 0.5: at (x, y, t) = (0, 0, 0) the definition demands
    // f(0) <= 0.5 f(0), i.e. 1 <= 0.5
    const auto r = check_m_convex(polynomial_fn({1.0, 0.0, 1.0}, 1.0), 0.5, 1.0);
    REQUIRE_FALSE(r.holds);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->x == 0.0);
    CHECK(r.witness->y == 0.0);
    CHECK(r.witness->t == 0.0);
    CHECK(r.witness->lhs == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r.witness->rhs == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(r.witness->gap == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("zero constant holds for fractional m") {
    const auto r = check_m_convex(constant_fn(0.0, 2.0), 0.3, 2.0);
    CHECK(r.holds);
}

TEST_CASE("m = 0 degenerate form is accepted") {
    CHECK(check_m_convex(power_fn(2.0, 1.0), 0.0, 1.0).holds);
}

TEST_CASE("|f'| of the square is m-convex (linear through the origin)") {
    const auto r = check_abs_deriv_m_convex(power_fn(2.0, 2.0), 1.0, 0.5, 2.0);
    CHECK(r.holds);
    CHECK(r.target == ConvexityTarget::AbsDeriv);
}

TEST_CASE("|f'| of the exponential fails for m below 1") {
    const auto r = check_abs_deriv_m_convex(exponential_fn(1.0), 1.0, 0.5, 1.0);
    REQUIRE_FALSE(r.holds);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->x == 0.0);
    CHECK(r.witness->y == 0.0);
    CHECK(r.witness->lhs == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r.witness->rhs == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("|f'|^2 of the square is convex") {
    const auto r = check_abs_deriv_m_convex(power_fn(2.0, 1.0), 2.0, 1.0, 1.0);
    CHECK(r.holds);
    CHECK(r.target == ConvexityTarget::AbsDerivPowQ);
    CHECK(r.q == 2.0);
}

TEST_CASE("m = 1 agrees with ordinary convexity") {
    CHECK(check_m_convex(power_fn(2.0, 1.0), 1.0, 1.0).holds);
    const auto r = check_m_convex(scaled_power_fn(-1.0, 2.0, 1.0), 1.0, 1.0);
    REQUIRE_FALSE(r.holds);
    CHECK(r.witness.has_value());
    CHECK(r.witness->gap > 0.0);
}

TEST_CASE("convex catalog functions vanishing at zero are m-convex for every m") {
    const std::vector<Fn1D> catalog = {
        power_fn(2.0, 2.0),
        power_fn(3.0, 2.0),
        power_fn(4.0, 2.0),
        scaled_power_fn(0.5, 3.0, 2.0),
        polynomial_fn({0.0, 0.0, 1.0, 1.0}, 2.0),
    };
    for (const Fn1D& f : catalog)
        for (double m : {0.1, 0.25, 0.5, 0.75, 1.0}) {
            const auto r = check_m_convex(f, m, 2.0);
            CHECK_MESSAGE(r.holds, f.label(), " m=", m);
        }
}

TEST_CASE("reports are reproducible for a fixed seed") {
    const Fn1D f = polynomial_fn({1.0, 0.0, 1.0}, 1.0);
    const auto r1 = check_m_convex(f, 0.5, 1.0, 16, 4000, 99);
    const auto r2 = check_m_convex(f, 0.5, 1.0, 16, 4000, 99);
    CHECK(r1.holds == r2.holds);
    CHECK(r1.samples_checked == r2.samples_checked);
    REQUIRE(r1.witness.has_value());
    REQUIRE(r2.witness.has_value());
    CHECK(r1.witness->x == r2.witness->x);
    CHECK(r1.witness->y == r2.witness->y);
    CHECK(r1.witness->t == r2.witness->t);
    CHECK(r1.witness->gap == r2.witness->gap);
}

TEST_CASE("argument validation") {
    const Fn1D f = power_fn(2.0, 1.0);
    CHECK_THROWS_AS(check_m_convex(f, -0.1, 1.0), InvalidParams);
    CHECK_THROWS_AS(check_m_convex(f, 1.1, 1.0), InvalidParams);
    CHECK_THROWS_AS(check_m_convex(f, 0.5, 2.0), DomainError); // hi beyond the domain
    CHECK_THROWS_AS(check_m_convex(f, 0.5, 1.0, 1), InvalidParams);
    CHECK_THROWS_AS(check_abs_deriv_m_convex(f, 0.5, 0.5, 1.0), InvalidParams); // q < 1
}

} // TEST_SUITE
