#pragma once

#include <string>
#include <vector>

namespace hhmc {

enum class FnKind { Power, ScaledPower, Polynomial, Exponential, Constant };

/// A scalar function with a closed-form derivative, evaluable on [0, domain_hi].
///
/// Instances are built through make_function (or the per-kind helpers below),
/// which validates the parameters, checks that f and f' are finite on the whole
/// domain, and cross-checks the stored derivative against a central finite
/// difference at 100 interior points. Construction fails rather than producing
/// a function whose derivative is inconsistent.
class Fn1D {
public:
    double operator()(double u) const { return eval(u); }
    double eval(double u) const;
    double deriv(double u) const;

    FnKind kind() const { return kind_; }
    const std::vector<double>& params() const { return params_; }
    double domain_hi() const { return domain_hi_; }
    const std::string& label() const { return label_; }

private:
    Fn1D(FnKind kind, std::vector<double> params, double domain_hi, std::string label);
    friend Fn1D make_function(FnKind kind, const std::vector<double>& params, double domain_hi);

    double eval_unchecked(double u) const;
    double deriv_unchecked(double u) const;
    void require_in_domain(double u) const;

    FnKind kind_;
    std::vector<double> params_;
    std::vector<double> dcoeffs_; // Polynomial only: derivative coefficients
    double domain_hi_;
    std::string label_;
};

/// Builds a function from kind + flat parameter list.
///   Power:       {n}            f(u) = u^n, n >= 1
///   ScaledPower: {c, n}         f(u) = c * u^n, n >= 1
///   Polynomial:  {c0, c1, ...}  f(u) = sum c_i u^i
///   Exponential: {}             f(u) = e^u
///   Constant:    {c}            f(u) = c
/// Throws InvalidParams when the parameters are malformed or f / f' is
/// non-finite anywhere on [0, domain_hi].
Fn1D make_function(FnKind kind, const std::vector<double>& params, double domain_hi);

Fn1D power_fn(double n, double domain_hi);
Fn1D scaled_power_fn(double c, double n, double domain_hi);
Fn1D polynomial_fn(const std::vector<double>& coeffs, double domain_hi);
Fn1D exponential_fn(double domain_hi);
Fn1D constant_fn(double c, double domain_hi);

} // namespace hhmc
