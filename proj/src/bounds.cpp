#include "hhmc/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "hhmc/errors.hpp"
#include "hhmc/quadrature.hpp"

namespace hhmc {

namespace {

constexpr double kZeroEps = 1e-12; // below this a value counts as zero for ratios

void validate_interval(const Fn1D& f, double a, double b, double x) {
    if (!(a >= 0.0))
        throw InvalidParams("interval must satisfy a >= 0");
    if (!(a < b))
        throw InvalidParams("interval must satisfy a < b");
    if (!(x >= a && x <= b))
        throw InvalidParams("x must lie in [a, b]");
    if (b > f.domain_hi() * (1.0 + 1e-12))
        throw DomainError("b exceeds the function's domain");
}

void validate_m(const Fn1D& f, double b, double m) {
    if (!(m > 0.0 && m <= 1.0))
        throw InvalidParams("m must lie in (0, 1]");
    if (b / m > f.domain_hi() * (1.0 + 1e-12))
        throw DomainError("b/m exceeds the function's domain");
}

double lhs_general_impl(const Fn1D& f, double a, double b, double x, double tol,
                        bool* converged) {
    const auto q = integrate([&](double u) { return f.eval(u); }, a, b, tol);
    if (converged)
        *converged = *converged && q.converged;
    return ((b - x) * f.eval(b) + (x - a) * f.eval(a)) / (b - a) - q.value / (b - a);
}

double lemma1_rhs_impl(const Fn1D& f, double a, double b, double x, double tol,
                       bool* converged) {
    const auto ia = integrate([&](double t) { return (t - 1.0) * f.deriv(a + t * (x - a)); },
                              0.0, 1.0, tol);
    const auto ib = integrate([&](double t) { return (1.0 - t) * f.deriv(b + t * (x - b)); },
                              0.0, 1.0, tol);
    if (converged)
        *converged = *converged && ia.converged && ib.converged;
    const double wa = (x - a) * (x - a) / (b - a);
    const double wb = (b - x) * (b - x) / (b - a);
    return wa * ia.value + wb * ib.value;
}

// shared kernel of the two q-averaged bounds
double powq_mean(double fx_absq, double fm_absq, double weight_far, double denom, double q) {
    return std::pow((fx_absq + weight_far * fm_absq) / denom, 1.0 / q);
}

} // namespace

void BoundParams::validate(const Fn1D& f) const {
    validate_interval(f, a, b, x);
    validate_m(f, b, m);
    if (!(q >= 1.0))
        throw InvalidParams("q must satisfy q >= 1");
}

double lhs_general(const Fn1D& f, double a, double b, double x, double tol) {
    validate_interval(f, a, b, x);
    return lhs_general_impl(f, a, b, x, tol, nullptr);
}

double lemma1_rhs(const Fn1D& f, double a, double b, double x, double tol) {
    validate_interval(f, a, b, x);
    return lemma1_rhs_impl(f, a, b, x, tol, nullptr);
}

double lemma1_residual(const Fn1D& f, double a, double b, double x, double tol) {
    validate_interval(f, a, b, x);
    return std::abs(lhs_general_impl(f, a, b, x, tol, nullptr) -
                    lemma1_rhs_impl(f, a, b, x, tol, nullptr));
}

Lemma1Check lemma1_check(const Fn1D& f, double a, double b, double x, double tol) {
    validate_interval(f, a, b, x);
    Lemma1Check c;
    c.lhs = lhs_general_impl(f, a, b, x, tol, &c.converged);
    c.rhs = lemma1_rhs_impl(f, a, b, x, tol, &c.converged);
    c.residual = std::abs(c.lhs - c.rhs);
    return c;
}

double bound_thm3(const Fn1D& f, double a, double b, double x, double m) {
    validate_interval(f, a, b, x);
    validate_m(f, b, m);
    const double dfx = std::abs(f.deriv(x));
    const double dfa = std::abs(f.deriv(a / m));
    const double dfb = std::abs(f.deriv(b / m));
    return (x - a) * (x - a) / (b - a) * (dfx + 2.0 * m * dfa) / 6.0 +
           (b - x) * (b - x) / (b - a) * (dfx + 2.0 * m * dfb) / 6.0;
}

double bound_thm4(const Fn1D& f, double a, double b, double x, double m, double q) {
    validate_interval(f, a, b, x);
    validate_m(f, b, m);
    if (!(q > 1.0))
        throw InvalidParams("the Hoelder-route bound needs q > 1");
    const double p = q / (q - 1.0);
    const double prefactor = std::pow(1.0 / (p + 1.0), 1.0 / p);
    const double dfxq = std::pow(std::abs(f.deriv(x)), q);
    const double dfaq = std::pow(std::abs(f.deriv(a / m)), q);
    const double dfbq = std::pow(std::abs(f.deriv(b / m)), q);
    return prefactor * ((x - a) * (x - a) / (b - a) * powq_mean(dfxq, dfaq, m, 2.0, q) +
                        (b - x) * (b - x) / (b - a) * powq_mean(dfxq, dfbq, m, 2.0, q));
}

double bound_thm5(const Fn1D& f, double a, double b, double x, double m, double q) {
    validate_interval(f, a, b, x);
    validate_m(f, b, m);
    if (!(q >= 1.0))
        throw InvalidParams("the power-mean-route bound needs q >= 1");
    const double dfxq = std::pow(std::abs(f.deriv(x)), q);
    const double dfaq = std::pow(std::abs(f.deriv(a / m)), q);
    const double dfbq = std::pow(std::abs(f.deriv(b / m)), q);
    return (x - a) * (x - a) / (2.0 * (b - a)) * powq_mean(dfxq, dfaq, 2.0 * m, 3.0, q) +
           (b - x) * (b - x) / (2.0 * (b - a)) * powq_mean(dfxq, dfbq, 2.0 * m, 3.0, q);
}

double bound_cor1(const Fn1D& f, double a, double b, double m) {
    validate_interval(f, a, b, 0.5 * (a + b));
    validate_m(f, b, m);
    const double mid = 0.5 * (a + b);
    return (b - a) / 12.0 *
           (std::abs(f.deriv(mid)) + m * std::abs(f.deriv(a / m)) + m * std::abs(f.deriv(b / m)));
}

double bound_cor2(const Fn1D& f, double a, double b, double m, double q, bool simplified) {
    validate_interval(f, a, b, 0.5 * (a + b));
    validate_m(f, b, m);
    if (!(q > 1.0))
        throw InvalidParams("the midpoint Hoelder bound needs q > 1");
    if (simplified && m != 1.0)
        throw InvalidParams("the simplified form is stated for m = 1 only");
    const double p = q / (q - 1.0);
    const double prefactor = simplified ? 1.0 : std::pow(1.0 / (p + 1.0), 1.0 / p);
    const double mid = 0.5 * (a + b);
    const double dfmq = std::pow(std::abs(f.deriv(mid)), q);
    const double dfaq = std::pow(std::abs(f.deriv(a / m)), q);
    const double dfbq = std::pow(std::abs(f.deriv(b / m)), q);
    return prefactor * (b - a) / 4.0 *
           (powq_mean(dfmq, dfaq, m, 2.0, q) + powq_mean(dfmq, dfbq, m, 2.0, q));
}

double bound_cor3(const Fn1D& f, double a, double b, double m, double q) {
    validate_interval(f, a, b, 0.5 * (a + b));
    validate_m(f, b, m);
    if (!(q >= 1.0))
        throw InvalidParams("the midpoint power-mean bound needs q >= 1");
    const double mid = 0.5 * (a + b);
    const double dfmq = std::pow(std::abs(f.deriv(mid)), q);
    const double dfaq = std::pow(std::abs(f.deriv(a / m)), q);
    const double dfbq = std::pow(std::abs(f.deriv(b / m)), q);
    return (b - a) / 8.0 *
           (powq_mean(dfmq, dfaq, 2.0 * m, 3.0, q) + powq_mean(dfmq, dfbq, 2.0 * m, 3.0, q));
}

ClassicalGap classical_hh_gap(const Fn1D& f, double a, double b, double tol) {
    if (!(a < b))
        throw InvalidParams("interval must satisfy a < b");
    if (!(a >= 0.0))
        throw InvalidParams("interval must satisfy a >= 0");
    if (b > f.domain_hi() * (1.0 + 1e-12))
        throw DomainError("b exceeds the function's domain");
    const auto q = integrate([&](double u) { return f.eval(u); }, a, b, tol);
    const double mean = q.value / (b - a);
    return {mean - f.eval(0.5 * (a + b)), 0.5 * (f.eval(a) + f.eval(b)) - mean};
}

bool inequality_violated(double lhs_abs, double bound) {
    return lhs_abs - bound > std::max(1e-8, 1e-6 * bound);
}

HHReport full_report(const Fn1D& f, const BoundParams& params, double tol,
                     const ConvexityReport& precondition_t3,
                     const ConvexityReport& precondition_t45) {
    params.validate(f);
    const double a = params.a, b = params.b, x = params.x, m = params.m, q = params.q;

    HHReport r;
    r.precondition_t3 = precondition_t3;
    r.precondition_t45 = precondition_t45;

    auto run = [&r](const char* what, auto&& fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            r.errors.push_back(std::string(what) + ": " + e.what());
        }
    };

    run("lhs", [&] { r.lhs_abs = std::abs(lhs_general_impl(f, a, b, x, tol, &r.quadrature_converged)); });
    run("bound_t3", [&] { r.bound_t3 = bound_thm3(f, a, b, x, m); });
    if (q > 1.0)
        run("bound_t4", [&] { r.bound_t4 = bound_thm4(f, a, b, x, m, q); });
    run("bound_t5", [&] { r.bound_t5 = bound_thm5(f, a, b, x, m, q); });
    run("lemma1", [&] {
        r.lemma1_residual =
            std::abs(lhs_general_impl(f, a, b, x, tol, &r.quadrature_converged) -
                     lemma1_rhs_impl(f, a, b, x, tol, &r.quadrature_converged));
    });
    run("classical", [&] {
        const auto g = classical_hh_gap(f, a, b, tol);
        r.classical_left_gap = g.left_gap;
        r.classical_right_gap = g.right_gap;
    });

    auto rate = [&](const std::string& name, double bound) {
        if (bound > kZeroEps) {
            r.tightness[name] = r.lhs_abs / bound;
        } else if (r.lhs_abs <= kZeroEps) {
            r.tightness[name] = 0.0;
        } else {
            r.tightness[name] = 0.0;
            r.vacuous_bounds.push_back(name);
        }
    };
    rate("t3", r.bound_t3);
    if (r.bound_t4)
        rate("t4", *r.bound_t4);
    rate("t5", r.bound_t5);

    return r;
}

HHReport full_report(const Fn1D& f, const BoundParams& params, double tol,
                     const OracleBudget& budget, std::uint64_t seed) {
    params.validate(f);
    const double oracle_hi = params.b / params.m; // covers [a, b] and the a/m, b/m points
    const ConvexityReport pre3 = check_abs_deriv_m_convex(
        f, 1.0, params.m, oracle_hi, budget.grid_n, budget.random_n, seed);
    const ConvexityReport pre45 =
        params.q == 1.0 ? pre3
                        : check_abs_deriv_m_convex(f, params.q, params.m, oracle_hi,
                                                   budget.grid_n, budget.random_n, seed);
    return full_report(f, params, tol, pre3, pre45);
}

} // namespace hhmc
