#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hhmc/convexity.hpp"
#include "hhmc/fn1d.hpp"

namespace hhmc {

/// Parameter tuple shared by every inequality evaluator.
/// Valid when 0 <= a < b, x in [a, b], m in (0, 1], q >= 1, and both b and b/m
/// lie inside the function's domain.
struct BoundParams {
    double a = 0.0;
    double b = 1.0;
    double x = 0.5;
    double m = 1.0;
    double q = 1.0;

    void validate(const Fn1D& f) const;
};

/// Oracle sampling budget for the precondition checks.
struct OracleBudget {
    int grid_n = 48;
    long random_n = 10000;
};

/// Deviation of the weighted-endpoint rule from the integral mean:
///   ((b-x) f(b) + (x-a) f(a)) / (b-a)  -  (1/(b-a)) * integral_a^b f
double lhs_general(const Fn1D& f, double a, double b, double x, double tol = 1e-10);

/// Right side of the endpoint-weighted identity, with the corrected t-weights:
///   ((x-a)^2/(b-a)) * integral_0^1 (t-1) f'(a + t(x-a)) dt
/// + ((b-x)^2/(b-a)) * integral_0^1 (1-t) f'(b + t(x-b)) dt
double lemma1_rhs(const Fn1D& f, double a, double b, double x, double tol = 1e-10);

/// |lhs_general - lemma1_rhs|; near zero whenever the quadrature converges.
double lemma1_residual(const Fn1D& f, double a, double b, double x, double tol = 1e-10);

struct Lemma1Check {
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
    bool converged = true;
};

/// lemma1_residual with both sides and the quadrature convergence flag.
Lemma1Check lemma1_check(const Fn1D& f, double a, double b, double x, double tol = 1e-10);

/// First-derivative bound on |lhs_general| under m-convexity of |f'|:
///   ((x-a)^2/(b-a)) (|f'(x)| + 2m|f'(a/m)|)/6 + ((b-x)^2/(b-a)) (|f'(x)| + 2m|f'(b/m)|)/6
double bound_thm3(const Fn1D& f, double a, double b, double x, double m);

/// Hoelder-route bound (q > 1, p = q/(q-1)):
///   (1/(p+1))^{1/p} [ ((x-a)^2/(b-a)) ((|f'(x)|^q + m|f'(a/m)|^q)/2)^{1/q}
///                   + ((b-x)^2/(b-a)) ((|f'(x)|^q + m|f'(b/m)|^q)/2)^{1/q} ]
double bound_thm4(const Fn1D& f, double a, double b, double x, double m, double q);

/// Power-mean-route bound (q >= 1); reduces to bound_thm3 at q = 1:
///   ((x-a)^2/(2(b-a))) ((|f'(x)|^q + 2m|f'(a/m)|^q)/3)^{1/q}
/// + ((b-x)^2/(2(b-a))) ((|f'(x)|^q + 2m|f'(b/m)|^q)/3)^{1/q}
double bound_thm5(const Fn1D& f, double a, double b, double x, double m, double q);

/// bound_thm3 specialized to the midpoint x = (a+b)/2:
///   ((b-a)/12) [ |f'((a+b)/2)| + m|f'(a/m)| + m|f'(b/m)| ]
double bound_cor1(const Fn1D& f, double a, double b, double m);

/// bound_thm4 specialized to the midpoint. With simplified = true the
/// (1/(p+1))^{1/p} prefactor is relaxed to 1 (m must be 1 in that form).
double bound_cor2(const Fn1D& f, double a, double b, double m, double q,
                  bool simplified = false);

/// bound_thm5 specialized to the midpoint:
///   ((b-a)/8) [ ((|f'(mid)|^q + 2m|f'(a/m)|^q)/3)^{1/q} + ((|f'(mid)|^q + 2m|f'(b/m)|^q)/3)^{1/q} ]
double bound_cor3(const Fn1D& f, double a, double b, double m, double q);

struct ClassicalGap {
    double left_gap = 0.0;  // integral mean - f(midpoint)
    double right_gap = 0.0; // endpoint average - integral mean
};

/// Both gaps of the classical two-sided midpoint/endpoint inequality;
/// nonnegative (up to tolerance) for convex f.
ClassicalGap classical_hh_gap(const Fn1D& f, double a, double b, double tol = 1e-10);

/// One parameter point, fully evaluated: the deviation functional, every
/// applicable right-hand bound, identity residual, classical gaps, tightness
/// ratios, and the precondition oracle reports that gate each bound.
struct HHReport {
    double lhs_abs = 0.0;
    double bound_t3 = 0.0;
    std::optional<double> bound_t4; // absent when q = 1
    double bound_t5 = 0.0;
    double lemma1_residual = 0.0;
    double classical_left_gap = 0.0;
    double classical_right_gap = 0.0;
    std::map<std::string, double> tightness; // "t3", "t4", "t5" -> lhs_abs / bound
    ConvexityReport precondition_t3;         // |f'| m-convex on [0, b/m]
    ConvexityReport precondition_t45;        // |f'|^q m-convex on [0, b/m]
    std::vector<std::string> vacuous_bounds; // bound ~ 0 while lhs_abs is not
    bool quadrature_converged = true;
    std::vector<std::string> errors; // per-component failures, recorded not thrown
};

/// Runs the precondition oracles, then assembles the report. Component errors
/// are recorded in HHReport::errors instead of aborting.
HHReport full_report(const Fn1D& f, const BoundParams& params, double tol = 1e-10,
                     const OracleBudget& budget = {}, std::uint64_t seed = 0);

/// Variant taking precomputed oracle reports (the sweep harness runs them itself).
HHReport full_report(const Fn1D& f, const BoundParams& params, double tol,
                     const ConvexityReport& precondition_t3,
                     const ConvexityReport& precondition_t45);

/// Violation test separating genuine counterexamples from quadrature noise:
/// true when lhs_abs - bound > max(1e-8, 1e-6 * bound).
bool inequality_violated(double lhs_abs, double bound);

} // namespace hhmc
