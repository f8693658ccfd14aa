#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "hhmc/bounds.hpp"
#include "hhmc/errors.hpp"
#include "hhmc/quadrature.hpp"

using namespace hhmc;

namespace {

double u01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

bool rel_eq(double x, double y, double tol = 1e-12) {
    const double scale = std::max(std::abs(x), std::abs(y));
    if (scale == 0.0)
        return true;
    return std::abs(x - y) <= tol * scale;
}

// closed-form deviation functional for polynomial coefficients (independent of
// the quadrature path)
double lhs_poly_oracle(const std::vector<double>& coeffs, double a, double b, double x) {
    auto eval = [&](double u) {
        double v = 0.0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
            v = v * u + *it;
        return v;
    };
    auto antideriv = [&](double u) {
        double v = 0.0;
        for (std::size_t i = coeffs.size(); i-- > 0;)
            v = v * u + coeffs[i] / static_cast<double>(i + 1);
        return v * u;
    };
    return ((b - x) * eval(b) + (x - a) * eval(a)) / (b - a) -
           (antideriv(b) - antideriv(a)) / (b - a);
}

} // namespace

TEST_SUITE("bounds") {

TEST_CASE("deviation functional golden values") {
    CHECK(std::abs(lhs_general(constant_fn(7.0, 1.0), 0.0, 1.0, 0.3)) <= 1e-12);
    const Fn1D sq = power_fn(2.0, 2.0);
    CHECK(lhs_general(sq, 0.0, 1.0, 0.5) == doctest::Approx(1.0 / 6.0).epsilon(1e-10));
    CHECK(lhs_general(sq, 0.0, 1.0, 0.25) == doctest::Approx(5.0 / 12.0).epsilon(1e-10));
}

TEST_CASE("deviation functional matches the antiderivative oracle") {
    std::mt19937_64 rng(3);
    const std::vector<std::vector<double>> polys = {
        {0, 0, 1}, {0, 0, 1, 1}, {2, -1, 0.5, 0, 0.25}, {5}};
    for (const auto& coeffs : polys) {
        const Fn1D f = polynomial_fn(coeffs, 4.0);
        for (int rep = 0; rep < 20; ++rep) {
            const double a = u01(rng) * 2.0;
            const double b = a + 0.1 + u01(rng) * 1.5;
            const double x = a + u01(rng) * (b - a);
            CHECK(lhs_general(f, a, b, x) ==
                  doctest::Approx(lhs_poly_oracle(coeffs, a, b, x)).epsilon(1e-9));
        }
    }
}

TEST_CASE("identity residual vanishes with the corrected weights") {
    const Fn1D sq = power_fn(2.0, 2.0);
    CHECK(lemma1_residual(sq, 0.0, 1.0, 0.25) <= 1e-8);
    CHECK(lemma1_residual(constant_fn(4.0, 3.0), 0.5, 2.5, 1.0) <= 1e-12);
    // linear f: both sides are zero by symmetry at the midpoint
    const Fn1D lin = power_fn(1.0, 2.0);
    CHECK(std::abs(lhs_general(lin, 0.0, 1.0, 0.5)) <= 1e-12);
    CHECK(lemma1_residual(lin, 0.0, 1.0, 0.5) <= 1e-10);
}

TEST_CASE("identity with the weights swapped back flips the sign") {
    // the uncorrected pairing ((1-t) on the a-chord, (t-1) on the b-chord)
    // reproduces the negated left side, so its residual is twice |lhs|
    const Fn1D sq = power_fn(2.0, 2.0);
    const double a = 0.0, b = 1.0, x = 0.25;
    const double ia = integrate([&](double t) { return (1.0 - t) * sq.deriv(a + t * (x - a)); },
                                0.0, 1.0, 1e-10).value;
    const double ib = integrate([&](double t) { return (t - 1.0) * sq.deriv(b + t * (x - b)); },
                                0.0, 1.0, 1e-10).value;
    const double swapped = (x - a) * (x - a) / (b - a) * ia + (b - x) * (b - x) / (b - a) * ib;
    const double lhs = lhs_general(sq, a, b, x);
    CHECK(swapped == doctest::Approx(-lhs).epsilon(1e-9));
    CHECK(std::abs(lhs - swapped) == doctest::Approx(2 * std::abs(lhs)).epsilon(1e-8));
    CHECK(swapped == doctest::Approx(-lemma1_rhs(sq, a, b, x)).epsilon(1e-9));
}

TEST_CASE("first-derivative bound golden values") {
    const Fn1D sq = power_fn(2.0, 2.0);
    CHECK(bound_thm3(sq, 0.0, 1.0, 0.25, 1.0) == doctest::Approx(41.0 / 96.0).epsilon(1e-13));
    CHECK(bound_thm3(sq, 0.0, 1.0, 0.5, 0.5) == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(bound_thm3(constant_fn(9.0, 2.0), 0.0, 1.0, 0.5, 0.5) == 0.0);
    CHECK(std::abs(lhs_general(sq, 0.0, 1.0, 0.25)) <= bound_thm3(sq, 0.0, 1.0, 0.25, 1.0));
}

TEST_CASE("Hoelder-route bound golden values") {
    const Fn1D sq = power_fn(2.0, 2.0);
    CHECK(bound_thm4(sq, 0.0, 1.0, 0.5, 1.0, 2.0) ==
          doctest::Approx(0.330279804909785).epsilon(1e-12));
    CHECK(bound_thm4(constant_fn(1.0, 2.0), 0.0, 1.0, 0.5, 1.0, 2.0) == 0.0);
    // x = a kills the first term; remaining value is sqrt(2/3)
    CHECK(bound_thm4(sq, 0.0, 1.0, 0.0, 1.0, 2.0) ==
          doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-13));
    CHECK_THROWS_AS(bound_thm4(sq, 0.0, 1.0, 0.5, 1.0, 1.0), InvalidParams);
}

TEST_CASE("power-mean-route bound golden values") {
    const Fn1D sq = power_fn(2.0, 2.0);
    CHECK(bound_thm5(sq, 0.0, 1.0, 0.5, 1.0, 2.0) ==
          doctest::Approx(0.288675134594813).epsilon(1e-12));
    CHECK(bound_thm5(sq, 0.0, 1.0, 0.25, 1.0, 1.0) ==
          doctest::Approx(bound_thm3(sq, 0.0, 1.0, 0.25, 1.0)).epsilon(1e-14));
    CHECK(bound_thm5(constant_fn(3.0, 2.0), 0.0, 1.0, 0.3, 1.0, 2.0) == 0.0);
    CHECK_THROWS_AS(bound_thm5(sq, 0.0, 1.0, 0.5, 1.0, 0.9), InvalidParams);
}

TEST_CASE("midpoint corollary golden values") {
    const Fn1D sq = power_fn(2.0, 2.0);
    CHECK(bound_cor1(sq, 0.0, 1.0, 1.0) == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(bound_cor1(sq, 0.0, 1.0, 0.5) == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(bound_cor1(constant_fn(2.0, 4.0), 0.0, 2.0, 0.7) == 0.0);

    CHECK(bound_cor2(sq, 0.0, 1.0, 1.0, 2.0) ==
          doctest::Approx(0.330279804909785).epsilon(1e-12));
    CHECK(bound_cor2(sq, 0.0, 1.0, 1.0, 2.0, true) ==
          doctest::Approx(0.572061402817684).epsilon(1e-12));
    CHECK(bound_cor2(sq, 0.0, 1.0, 1.0, 2.0, true) >= bound_cor2(sq, 0.0, 1.0, 1.0, 2.0));
    CHECK(bound_cor2(constant_fn(1.0, 2.0), 0.0, 1.0, 1.0, 3.0) == 0.0);
    CHECK_THROWS_AS(bound_cor2(sq, 0.0, 1.0, 1.0, 1.0), InvalidParams);
    CHECK_THROWS_AS(bound_cor2(sq, 0.0, 1.0, 0.5, 2.0, true), InvalidParams);

    CHECK(bound_cor3(sq, 0.0, 1.0, 1.0, 2.0) ==
          doctest::Approx(0.288675134594813).epsilon(1e-12));
    CHECK(bound_cor3(sq, 0.0, 1.0, 1.0, 1.0) == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(bound_cor3(constant_fn(1.0, 2.0), 0.0, 1.0, 1.0, 2.0) == 0.0);
}

TEST_CASE("classical two-sided gaps") {
    const auto g1 = classical_hh_gap(power_fn(2.0, 2.0), 0.0, 1.0);
    CHECK(g1.left_gap == doctest::Approx(1.0 / 12.0).epsilon(1e-10));
    CHECK(g1.right_gap == doctest::Approx(1.0 / 6.0).epsilon(1e-10));
    const auto g2 = classical_hh_gap(power_fn(1.0, 2.0), 0.0, 2.0);
    CHECK(std::abs(g2.left_gap) <= 1e-12);
    CHECK(std::abs(g2.right_gap) <= 1e-12);
    const auto g3 = classical_hh_gap(constant_fn(4.0, 3.0), 1.0, 3.0);
    CHECK(std::abs(g3.left_gap) <= 1e-12);
    CHECK(std::abs(g3.right_gap) <= 1e-12);
}

TEST_CASE("reduction identities are exact") {
    std::mt19937_64 rng(17);
    const std::vector<Fn1D> fns = {power_fn(2.0, 16.0), power_fn(3.0, 16.0),
                                   polynomial_fn({0, 1, 2, 1}, 16.0), exponential_fn(16.0)};
    for (const Fn1D& f : fns)
        for (int rep = 0; rep < 25; ++rep) {
            const double a = u01(rng) * 1.5;
            const double b = a + 0.2 + u01(rng) * 1.5;
            const double x = a + u01(rng) * (b - a);
            const double mid = 0.5 * (a + b);
            const double m = 0.25 + 0.75 * u01(rng);
            const double q = 1.0 + 2.5 * u01(rng) + 1e-6;

            CHECK(rel_eq(bound_thm3(f, a, b, mid, m), bound_cor1(f, a, b, m)));
            CHECK(rel_eq(bound_thm4(f, a, b, mid, m, q), bound_cor2(f, a, b, m, q)));
            CHECK(rel_eq(bound_thm5(f, a, b, mid, m, q), bound_cor3(f, a, b, m, q)));
            CHECK(rel_eq(bound_thm5(f, a, b, x, m, 1.0), bound_thm3(f, a, b, x, m)));
            CHECK(rel_eq(bound_cor3(f, a, b, m, 1.0), bound_cor1(f, a, b, m)));
        }
}

TEST_CASE("m = 1 midpoint forms match the classical endpoint-average bounds") {
    std::mt19937_64 rng(23);
    const std::vector<Fn1D> fns = {power_fn(2.0, 4.0), polynomial_fn({1, 1, 1, 1}, 4.0),
                                   exponential_fn(4.0)};
    for (const Fn1D& f : fns)
        for (int rep = 0; rep < 20; ++rep) {
            const double a = u01(rng) * 1.5;
            const double b = a + 0.2 + u01(rng) * 2.0;
            const double mid = 0.5 * (a + b);
            const double da = std::abs(f.deriv(a));
            const double db = std::abs(f.deriv(b));
            const double dm = std::abs(f.deriv(mid));

            const double eq1_rhs = (b - a) / 12.0 * (dm + da + db);
            CHECK(rel_eq(bound_cor1(f, a, b, 1.0), eq1_rhs));

            const double q = 1.0 + 2.0 * u01(rng) + 1e-6;
            const double eq2_rhs =
                (b - a) / 8.0 *
                (std::pow((std::pow(dm, q) + 2.0 * std::pow(da, q)) / 3.0, 1.0 / q) +
                 std::pow((std::pow(dm, q) + 2.0 * std::pow(db, q)) / 3.0, 1.0 / q));
            CHECK(rel_eq(bound_cor3(f, a, b, 1.0, q), eq2_rhs));
        }
}

TEST_CASE("certified cases never violate the bounds") {
    std::mt19937_64 rng(29);
    const std::vector<Fn1D> fns = {power_fn(2.0, 8.0), power_fn(3.0, 8.0), power_fn(4.0, 8.0),
                                   polynomial_fn({0, 0, 1, 1}, 8.0)};
    const std::vector<double> ms = {0.25, 0.5, 1.0};
    const std::vector<double> qs = {1.0, 2.0, 3.0};
    for (int rep = 0; rep < 60; ++rep) {
        const Fn1D& f = fns[rng() % fns.size()];
        const double a = u01(rng) * 1.5;
        const double b = a + 0.1 + u01(rng) * 0.5;
        const double x = a + u01(rng) * (b - a);
        const double m = ms[rng() % ms.size()];
        const double q = qs[rng() % qs.size()];

        const auto pre3 = check_abs_deriv_m_convex(f, 1.0, m, b / m, 12, 300, rep);
        const auto pre45 = check_abs_deriv_m_convex(f, q, m, b / m, 12, 300, rep);
        REQUIRE(pre3.holds);
        REQUIRE(pre45.holds);

        const double lhs = std::abs(lhs_general(f, a, b, x));
        CHECK(lhs <= bound_thm3(f, a, b, x, m) + 1e-8);
        CHECK(lhs <= bound_thm5(f, a, b, x, m, q) + 1e-8);
        if (q > 1.0)
            CHECK(lhs <= bound_thm4(f, a, b, x, m, q) + 1e-8);
        CHECK(lemma1_residual(f, a, b, x) <= 1e-8);
    }
}

TEST_CASE("endpoint degeneracy keeps everything finite") {
    const Fn1D f = polynomial_fn({0, 0, 1, 1}, 8.0);
    for (double x : {0.2, 1.7}) { // x = a and x = b
        const double t3 = bound_thm3(f, 0.2, 1.7, x, 0.5);
        const double t5 = bound_thm5(f, 0.2, 1.7, x, 0.5, 2.0);
        CHECK(std::isfinite(t3));
        CHECK(std::isfinite(t5));
        CHECK(std::abs(lhs_general(f, 0.2, 1.7, x)) <= t3 + 1e-8);
    }
    // x = a: only the far-endpoint term survives
    const double expect = (1.7 - 0.2) / 6.0 *
                          (std::abs(f.deriv(0.2)) + 2.0 * 0.5 * std::abs(f.deriv(1.7 / 0.5)));
    CHECK(bound_thm3(f, 0.2, 1.7, 0.2, 0.5) == doctest::Approx(expect).epsilon(1e-13));
}

TEST_CASE("bounds are positively homogeneous in f") {
    std::mt19937_64 rng(31);
    for (double c : {2.0, 0.5, 10.0}) {
        for (double n : {2.0, 3.0}) {
            const Fn1D f = power_fn(n, 16.0);
            const Fn1D cf = scaled_power_fn(c, n, 16.0);
            for (int rep = 0; rep < 10; ++rep) {
                const double a = u01(rng);
                const double b = a + 0.2 + u01(rng);
                const double x = a + u01(rng) * (b - a);
                const double m = 0.25 + 0.75 * u01(rng);
                const double q = 1.5 + u01(rng);
                CHECK(rel_eq(bound_thm3(cf, a, b, x, m), c * bound_thm3(f, a, b, x, m)));
                CHECK(rel_eq(bound_thm4(cf, a, b, x, m, q), c * bound_thm4(f, a, b, x, m, q)));
                CHECK(rel_eq(bound_thm5(cf, a, b, x, m, q), c * bound_thm5(f, a, b, x, m, q)));
                CHECK(rel_eq(bound_cor1(cf, a, b, m), c * bound_cor1(f, a, b, m)));
            }
        }
    }
}

TEST_CASE("deviation functional scales with polynomial coefficients") {
    std::mt19937_64 rng(37);
    for (double c : {2.0, 0.5, 10.0}) {
        const std::vector<double> base = {0, 0, 1, 1};
        std::vector<double> scaled = base;
        for (double& v : scaled)
            v *= c;
        const Fn1D f = polynomial_fn(base, 4.0);
        const Fn1D cf = polynomial_fn(scaled, 4.0);
        for (int rep = 0; rep < 10; ++rep) {
            const double a = u01(rng);
            const double b = a + 0.2 + u01(rng);
            const double x = a + u01(rng) * (b - a);
            CHECK(rel_eq(lhs_general(cf, a, b, x), c * lhs_general(f, a, b, x)));
        }
    }
}

TEST_CASE("full report on the golden case") {
    const Fn1D sq = power_fn(2.0, 2.0);
    const HHReport r = full_report(sq, {0.0, 1.0, 0.5, 1.0, 2.0}, 1e-10, {16, 2000}, 1);
    CHECK(r.lhs_abs == doctest::Approx(1.0 / 6.0).epsilon(1e-9));
    CHECK(r.bound_t3 == doctest::Approx(0.25).epsilon(1e-12));
    REQUIRE(r.bound_t4.has_value());
    CHECK(*r.bound_t4 == doctest::Approx(0.330279804909785).epsilon(1e-12));
    CHECK(r.bound_t5 == doctest::Approx(0.288675134594813).epsilon(1e-12));
    CHECK(r.lemma1_residual <= 1e-8);
    CHECK(r.classical_left_gap == doctest::Approx(1.0 / 12.0).epsilon(1e-9));
    CHECK(r.classical_right_gap == doctest::Approx(1.0 / 6.0).epsilon(1e-9));
    CHECK(r.precondition_t3.holds);
    CHECK(r.precondition_t45.holds);
    CHECK(r.tightness.at("t3") == doctest::Approx(r.lhs_abs / 0.25));
    CHECK(r.tightness.count("t4") == 1);
    CHECK(r.vacuous_bounds.empty());
    CHECK(r.quadrature_converged);
    CHECK(r.errors.empty());
}

TEST_CASE("full report on a constant is all zeros") {
    const HHReport r = full_report(constant_fn(7.0, 4.0), {0.0, 2.0, 1.0, 0.5, 2.0},
                                   1e-10, {8, 200}, 1);
    CHECK(r.lhs_abs <= 1e-12);
    CHECK(r.bound_t3 == 0.0);
    CHECK(r.bound_t5 == 0.0);
    CHECK(r.tightness.at("t3") == 0.0);
    CHECK(r.tightness.at("t5") == 0.0);
    CHECK(r.vacuous_bounds.empty());
}

TEST_CASE("full report flags inapplicable bounds instead of aborting") {
    const Fn1D ex = exponential_fn(4.0);
    const HHReport r = full_report(ex, {0.0, 1.0, 0.5, 0.5, 1.0}, 1e-10, {16, 500}, 1);
    CHECK_FALSE(r.precondition_t3.holds);
    CHECK_FALSE(r.precondition_t45.holds);
    CHECK(r.precondition_t3.witness.has_value());
    CHECK(r.bound_t3 > 0.0); // still computed
    CHECK_FALSE(r.bound_t4.has_value());
    CHECK(r.errors.empty());
}

TEST_CASE("q = 1 omits the Hoelder bound") {
    const HHReport r = full_report(power_fn(2.0, 2.0), {0.0, 1.0, 0.5, 1.0, 1.0},
                                   1e-10, {8, 200}, 1);
    CHECK_FALSE(r.bound_t4.has_value());
    CHECK(r.tightness.count("t4") == 0);
}

TEST_CASE("parameter validation") {
    const Fn1D sq = power_fn(2.0, 2.0);
    CHECK_THROWS_AS(lhs_general(sq, 1.0, 0.5, 0.7), InvalidParams);       // a >= b
    CHECK_THROWS_AS(lhs_general(sq, -0.5, 1.0, 0.5), InvalidParams);      // a < 0
    CHECK_THROWS_AS(lhs_general(sq, 0.0, 1.0, 1.5), InvalidParams);       // x outside
    CHECK_THROWS_AS(lhs_general(sq, 0.0, 4.0, 1.0), DomainError);         // b beyond domain
    CHECK_THROWS_AS(bound_thm3(sq, 0.0, 1.0, 0.5, 0.0), InvalidParams);   // m = 0
    CHECK_THROWS_AS(bound_thm3(sq, 0.0, 1.5, 0.5, 0.5), DomainError);     // b/m = 3 > 2
    BoundParams bad{0.0, 1.0, 0.5, 1.0, 0.5};
    CHECK_THROWS_AS(bad.validate(sq), InvalidParams);                     // q < 1
}

} // TEST_SUITE
