#include "hhmc/means.hpp"

#include <cmath>

#include "hhmc/errors.hpp"

namespace hhmc {

namespace {

constexpr double kHoldsEps = 1e-9; // closed-form quantities, no quadrature involved

void require_positive_pair(double alpha, double beta) {
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw InvalidParams("means are defined for positive arguments");
}

void validate_case(const MeansCase& c) {
    require_positive_pair(c.a, c.b);
    if (!(c.a < c.b))
        throw InvalidParams("case needs a < b");
    if (c.n < 2)
        throw InvalidParams("case needs integer n >= 2");
    if (!(c.m > 0.0 && c.m <= 1.0))
        throw InvalidParams("case needs m in (0, 1]");
}

// A(a^n, b^n) - L_n^n(a, b), computed without the 1/n root round trip
double mean_gap(double a, double b, int n) {
    const double an = std::pow(a, n);
    const double bn = std::pow(b, n);
    const double lnn = (std::pow(b, n + 1) - std::pow(a, n + 1)) / ((n + 1) * (b - a));
    return std::abs(0.5 * (an + bn) - lnn);
}

} // namespace

double arithmetic_mean(double alpha, double beta) {
    require_positive_pair(alpha, beta);
    return 0.5 * (alpha + beta);
}

double log_mean(double alpha, double beta) {
    require_positive_pair(alpha, beta);
    if (alpha == beta)
        throw InvalidParams("log mean needs distinct arguments");
    return (alpha - beta) / (std::log(alpha) - std::log(beta));
}

double gen_log_mean(double alpha, double beta, int n) {
    require_positive_pair(alpha, beta);
    if (alpha == beta)
        throw InvalidParams("generalized log mean needs distinct arguments");
    if (n == -1 || n == 0)
        throw InvalidParams("generalized log mean excludes n in {-1, 0}");
    const double bracket =
        (std::pow(beta, n + 1) - std::pow(alpha, n + 1)) / ((n + 1) * (beta - alpha));
    return std::pow(bracket, 1.0 / n);
}

PropCheck prop1_check(const MeansCase& c) {
    validate_case(c);
    const double mid = 0.5 * (c.a + c.b);
    const double lhs = mean_gap(c.a, c.b, c.n);
    const double rhs = c.n * (c.b - c.a) / 12.0 *
                       (std::pow(mid, c.n - 1) + c.m * std::pow(c.a / c.m, c.n - 1) +
                        c.m * std::pow(c.b / c.m, c.n - 1));
    return {lhs, rhs, lhs <= rhs + kHoldsEps};
}

PropCheck prop2_check(const MeansCase& c) {
    validate_case(c);
    if (!(c.q > 1.0))
        throw InvalidParams("case needs q > 1");
    const double mid = 0.5 * (c.a + c.b);
    const double e = c.q * (c.n - 1);
    const double mide = std::pow(mid, e);
    const double lhs = mean_gap(c.a, c.b, c.n);
    const double rhs = c.n * (c.b - c.a) / 8.0 *
                       (std::pow((mide + 2.0 * c.m * std::pow(c.a / c.m, e)) / 3.0, 1.0 / c.q) +
                        std::pow((mide + 2.0 * c.m * std::pow(c.b / c.m, e)) / 3.0, 1.0 / c.q));
    return {lhs, rhs, lhs <= rhs + kHoldsEps};
}

} // namespace hhmc
