#pragma once

namespace hhmc {

/// Case parameters for the special-means propositions.
struct MeansCase {
    double a = 1.0; // 0 < a < b
    double b = 2.0;
    int n = 2;      // power index, n >= 2 here
    double m = 1.0; // m in (0, 1]
    double q = 2.0; // q > 1 (prop2 only)
};

struct PropCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
};

double arithmetic_mean(double alpha, double beta);

/// (alpha - beta) / (ln alpha - ln beta); requires positive, distinct arguments.
double log_mean(double alpha, double beta);

/// [(beta^{n+1} - alpha^{n+1}) / ((n+1)(beta - alpha))]^{1/n}, n integer, n not in {-1, 0}.
double gen_log_mean(double alpha, double beta, int n);

/// |A(a^n, b^n) - L_n^n(a, b)| against n*(b-a)/12 * [mid^{n-1} + m(a/m)^{n-1} + m(b/m)^{n-1}].
PropCheck prop1_check(const MeansCase& c);

/// Same left side against the power-mean-route form
/// n*(b-a)/8 * ( [(mid^{q(n-1)} + 2m(a/m)^{q(n-1)})/3]^{1/q} + [(mid^{q(n-1)} + 2m(b/m)^{q(n-1)})/3]^{1/q} ).
PropCheck prop2_check(const MeansCase& c);

} // namespace hhmc
