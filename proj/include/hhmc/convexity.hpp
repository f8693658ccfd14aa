#pragma once

#include <cstdint>
#include <optional>

#include "hhmc/fn1d.hpp"

namespace hhmc {

enum class ConvexityTarget { F, AbsDeriv, AbsDerivPowQ };

struct ConvexityWitness {
    double x = 0.0;
    double y = 0.0;
    double t = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double gap = 0.0; // lhs - rhs
};

/// Sampled certificate (or counterexample) for m-convexity of a target on [0, hi].
///
/// holds = true means no sampled triple violated
///     g(t*x + m*(1-t)*y) <= t*g(x) + m*(1-t)*g(y)
/// beyond the slack 1e-12 * (1 + |rhs|). It is a sampled certificate, not a proof.
/// holds = false carries the worst violating triple as a witness.
struct ConvexityReport {
    bool holds = true;
    std::optional<ConvexityWitness> witness;
    long samples_checked = 0;
    double m = 1.0;
    ConvexityTarget target = ConvexityTarget::F;
    double q = 1.0; // meaningful for AbsDerivPowQ only
};

/// Checks m-convexity of f itself on [0, hi] over a grid_n^3 lattice of
/// (x, y, t) in [0, hi]^2 x [0, 1] plus random_n seeded random triples.
/// Accepts m in [0, 1] (m = 0 is the degenerate starshaped case).
/// Throws DomainError when hi exceeds f's domain, InvalidParams otherwise.
ConvexityReport check_m_convex(const Fn1D& f, double m, double hi,
                               int grid_n = 48, long random_n = 10000,
                               std::uint64_t seed = 0);

/// Same check applied to u -> |f'(u)|^q (q >= 1; target AbsDeriv when q = 1).
ConvexityReport check_abs_deriv_m_convex(const Fn1D& f, double q, double m, double hi,
                                         int grid_n = 48, long random_n = 10000,
                                         std::uint64_t seed = 0);

} // namespace hhmc
