#include "hhmc/quadrature.hpp"

#include <cmath>

#include "hhmc/errors.hpp"

namespace hhmc {

namespace {

struct Workspace {
    const std::function<double(double)>& g;
    long evaluations = 0;
    double error_sum = 0.0;
    bool converged = true;

    double sample(double u) {
        const double v = g(u);
        if (!std::isfinite(v))
            throw NonFiniteSample("integrand returned a non-finite value");
        ++evaluations;
        return v;
    }
};

double simpson_panel(double fa, double fm, double fb, double h) {
    return h * (fa + 4.0 * fm + fb) / 6.0;
}

// Bisect until |S_fine - S_coarse| <= 15 * eps, then accept the Richardson
// extrapolated value. eps is split evenly between the halves.
double refine(Workspace& ws, double lo, double hi, double eps,
              double flo, double fmid, double fhi, double whole, int depth) {
    const double mid = 0.5 * (lo + hi);
    const double lq = ws.sample(0.5 * (lo + mid));
    const double rq = ws.sample(0.5 * (mid + hi));
    const double left = simpson_panel(flo, lq, fmid, mid - lo);
    const double right = simpson_panel(fmid, rq, fhi, hi - mid);
    const double diff = (left + right) - whole;

    if (std::abs(diff) <= 15.0 * eps || depth <= 0) {
        if (depth <= 0 && std::abs(diff) > 15.0 * eps)
            ws.converged = false;
        ws.error_sum += std::abs(diff) / 15.0;
        return left + right + diff / 15.0;
    }
    return refine(ws, lo, mid, 0.5 * eps, flo, lq, fmid, left, depth - 1) +
           refine(ws, mid, hi, 0.5 * eps, fmid, rq, fhi, right, depth - 1);
}

} // namespace

QuadratureEstimate integrate(const std::function<double(double)>& g,
                             double lo, double hi, double tol, int max_depth) {
    if (!(lo <= hi))
        throw InvalidParams("integrate: lo must not exceed hi");
    if (!(tol > 0.0))
        throw InvalidParams("integrate: tol must be positive");
    if (max_depth < 1)
        throw InvalidParams("integrate: max_depth must be at least 1");

    if (lo == hi)
        return {0.0, 0.0, 0, true};

    Workspace ws{g};
    const double flo = ws.sample(lo);
    const double fhi = ws.sample(hi);
    const double mid = 0.5 * (lo + hi);
    const double fmid = ws.sample(mid);
    const double whole = simpson_panel(flo, fmid, fhi, hi - lo);

    QuadratureEstimate est;
    est.value = refine(ws, lo, hi, tol, flo, fmid, fhi, whole, max_depth);
    est.abs_error_estimate = ws.error_sum;
    est.evaluations = ws.evaluations;
    est.converged = ws.converged;
    return est;
}

} // namespace hhmc
