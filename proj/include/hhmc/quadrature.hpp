#pragma once

#include <functional>

namespace hhmc {

struct QuadratureEstimate {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    long evaluations = 0;
    bool converged = true;
};

/// Adaptive Simpson integration of g over [lo, hi].
///
/// Panels are bisected until the Richardson error estimate |S_fine - S_coarse| / 15
/// drops below the panel's share of tol; accepted panels contribute the
/// extrapolated value S_fine + (S_fine - S_coarse) / 15. When converged is true,
/// abs_error_estimate <= tol. Exhausting max_depth is a soft failure: the best
/// estimate is still returned with converged = false.
///
/// Throws InvalidParams for lo > hi or tol <= 0, NonFiniteSample when g returns
/// NaN or infinity. An empty interval (lo == hi) yields exactly 0 with no
/// evaluations.
QuadratureEstimate integrate(const std::function<double(double)>& g,
                             double lo, double hi,
                             double tol = 1e-10, int max_depth = 40);

} // namespace hhmc
