#include "hhmc/convexity.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "hhmc/errors.hpp"

namespace hhmc {

namespace {

// uniform in [0, 1), bit-stable across standard libraries
double u01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct WorstViolation {
    bool found = false;
    ConvexityWitness w;

    void offer(double x, double y, double t, double lhs, double rhs) {
        const double gap = lhs - rhs;
        const double slack = 1e-12 * (1.0 + std::abs(rhs));
        if (gap > slack && (!found || gap > w.gap)) {
            found = true;
            w = {x, y, t, lhs, rhs, gap};
        }
    }
};

template <class G>
ConvexityReport check_definition(const G& g, double m, double hi,
                                 int grid_n, long random_n, std::uint64_t seed,
                                 ConvexityTarget target, double q) {
    std::vector<double> pts(grid_n);
    std::vector<double> gpts(grid_n);
    for (int i = 0; i < grid_n; ++i) {
        pts[i] = hi * static_cast<double>(i) / (grid_n - 1);
        gpts[i] = g(pts[i]);
        if (!std::isfinite(gpts[i]))
            throw NonFiniteSample("convexity target non-finite at u=" + std::to_string(pts[i]));
    }

    WorstViolation worst;
    long samples = 0;

    for (int ix = 0; ix < grid_n; ++ix) {
        for (int iy = 0; iy < grid_n; ++iy) {
            for (int it = 0; it < grid_n; ++it) {
                const double t = static_cast<double>(it) / (grid_n - 1);
                const double p = t * pts[ix] + m * (1.0 - t) * pts[iy];
                const double lhs = g(p);
                const double rhs = t * gpts[ix] + m * (1.0 - t) * gpts[iy];
                if (!std::isfinite(lhs))
                    throw NonFiniteSample("convexity target non-finite at combination point");
                worst.offer(pts[ix], pts[iy], t, lhs, rhs);
                ++samples;
            }
        }
    }

    std::mt19937_64 rng(seed);
    for (long i = 0; i < random_n; ++i) {
        const double x = u01(rng) * hi;
        const double y = u01(rng) * hi;
        const double t = u01(rng);
        const double lhs = g(t * x + m * (1.0 - t) * y);
        const double rhs = t * g(x) + m * (1.0 - t) * g(y);
        if (!std::isfinite(lhs) || !std::isfinite(rhs))
            throw NonFiniteSample("convexity target non-finite at random sample");
        worst.offer(x, y, t, lhs, rhs);
        ++samples;
    }

    ConvexityReport report;
    report.holds = !worst.found;
    if (worst.found)
        report.witness = worst.w;
    report.samples_checked = samples;
    report.m = m;
    report.target = target;
    report.q = q;
    return report;
}

void validate_common(const Fn1D& f, double m, double hi, int grid_n) {
    if (!(m >= 0.0 && m <= 1.0))
        throw InvalidParams("m must lie in [0, 1]");
    if (!(hi > 0.0))
        throw InvalidParams("hi must be positive");
    if (hi > f.domain_hi() * (1.0 + 1e-12))
        throw DomainError("hi exceeds the function's domain");
    if (grid_n < 2)
        throw InvalidParams("grid_n must be at least 2");
}

} // namespace

ConvexityReport check_m_convex(const Fn1D& f, double m, double hi,
                               int grid_n, long random_n, std::uint64_t seed) {
    validate_common(f, m, hi, grid_n);
    return check_definition([&](double u) { return f.eval(u); },
                            m, hi, grid_n, random_n, seed, ConvexityTarget::F, 1.0);
}

ConvexityReport check_abs_deriv_m_convex(const Fn1D& f, double q, double m, double hi,
                                         int grid_n, long random_n, std::uint64_t seed) {
    validate_common(f, m, hi, grid_n);
    if (!(q >= 1.0))
        throw InvalidParams("q must satisfy q >= 1");
    if (q == 1.0)
        return check_definition([&](double u) { return std::abs(f.deriv(u)); },
                                m, hi, grid_n, random_n, seed, ConvexityTarget::AbsDeriv, 1.0);
    return check_definition([&, q](double u) { return std::pow(std::abs(f.deriv(u)), q); },
                            m, hi, grid_n, random_n, seed, ConvexityTarget::AbsDerivPowQ, q);
}

} // namespace hhmc
