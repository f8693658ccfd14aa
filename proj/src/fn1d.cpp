#include "hhmc/fn1d.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "hhmc/errors.hpp"

namespace hhmc {

namespace {

std::string fmt_num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

std::string default_label(FnKind kind, const std::vector<double>& params) {
    switch (kind) {
    case FnKind::Power:
        return "u^" + fmt_num(params[0]);
    case FnKind::ScaledPower:
        return fmt_num(params[0]) + "*u^" + fmt_num(params[1]);
    case FnKind::Polynomial: {
        std::ostringstream os;
        os << "poly(";
        for (std::size_t i = 0; i < params.size(); ++i)
            os << (i ? "," : "") << fmt_num(params[i]);
        os << ")";
        return os.str();
    }
    case FnKind::Exponential:
        return "exp(u)";
    case FnKind::Constant:
        return "const(" + fmt_num(params[0]) + ")";
    }
    return "?";
}

double horner(const std::vector<double>& c, double u) {
    double v = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        v = v * u + *it;
    return v;
}

} // namespace

Fn1D::Fn1D(FnKind kind, std::vector<double> params, double domain_hi, std::string label)
    : kind_(kind), params_(std::move(params)), domain_hi_(domain_hi), label_(std::move(label)) {
    if (kind_ == FnKind::Polynomial) {
        dcoeffs_.reserve(params_.size() > 1 ? params_.size() - 1 : 0);
        for (std::size_t i = 1; i < params_.size(); ++i)
            dcoeffs_.push_back(static_cast<double>(i) * params_[i]);
    }
}

void Fn1D::require_in_domain(double u) const {
    // small slack so points landing on the boundary after rounding still pass
    const double slack = 1e-12 * (1.0 + domain_hi_);
    if (!(u >= -slack && u <= domain_hi_ + slack))
        throw DomainError(label_ + ": evaluation point " + fmt_num(u) +
                          " outside [0, " + fmt_num(domain_hi_) + "]");
}

double Fn1D::eval_unchecked(double u) const {
    switch (kind_) {
    case FnKind::Power:
        return std::pow(u, params_[0]);
    case FnKind::ScaledPower:
        return params_[0] * std::pow(u, params_[1]);
    case FnKind::Polynomial:
        return horner(params_, u);
    case FnKind::Exponential:
        return std::exp(u);
    case FnKind::Constant:
        return params_[0];
    }
    return 0.0;
}

double Fn1D::deriv_unchecked(double u) const {
    switch (kind_) {
    case FnKind::Power:
        return params_[0] * std::pow(u, params_[0] - 1.0);
    case FnKind::ScaledPower:
        return params_[0] * params_[1] * std::pow(u, params_[1] - 1.0);
    case FnKind::Polynomial:
        return horner(dcoeffs_, u);
    case FnKind::Exponential:
        return std::exp(u);
    case FnKind::Constant:
        return 0.0;
    }
    return 0.0;
}

double Fn1D::eval(double u) const {
    require_in_domain(u);
    return eval_unchecked(u < 0.0 ? 0.0 : u);
}

double Fn1D::deriv(double u) const {
    require_in_domain(u);
    return deriv_unchecked(u < 0.0 ? 0.0 : u);
}

Fn1D make_function(FnKind kind, const std::vector<double>& params, double domain_hi) {
    if (!(domain_hi > 0.0) || !std::isfinite(domain_hi))
        throw InvalidParams("domain_hi must be positive and finite");

    switch (kind) {
    case FnKind::Power:
        if (params.size() != 1)
            throw InvalidParams("Power takes exactly one parameter (the exponent)");
        if (!(params[0] >= 1.0))
            throw InvalidParams("Power exponent must satisfy n >= 1");
        break;
    case FnKind::ScaledPower:
        if (params.size() != 2)
            throw InvalidParams("ScaledPower takes {scale, exponent}");
        if (!(params[1] >= 1.0))
            throw InvalidParams("ScaledPower exponent must satisfy n >= 1");
        break;
    case FnKind::Polynomial:
        if (params.empty())
            throw InvalidParams("Polynomial needs at least one coefficient");
        break;
    case FnKind::Exponential:
        if (!params.empty())
            throw InvalidParams("Exponential takes no parameters");
        break;
    case FnKind::Constant:
        if (params.size() != 1)
            throw InvalidParams("Constant takes exactly one parameter");
        break;
    }
    for (double p : params)
        if (!std::isfinite(p))
            throw InvalidParams("non-finite parameter");

    Fn1D f(kind, params, domain_hi, default_label(kind, params));

    // finiteness scan over the whole domain, endpoints included
    constexpr int kScanPoints = 101;
    for (int i = 0; i < kScanPoints; ++i) {
        const double u = domain_hi * static_cast<double>(i) / (kScanPoints - 1);
        if (!std::isfinite(f.eval_unchecked(u)) || !std::isfinite(f.deriv_unchecked(u)))
            throw InvalidParams(f.label() + ": non-finite value on [0, " + fmt_num(domain_hi) + "]");
    }

    // derivative consistency against a central finite difference at 100
    // interior points; tolerance 1e-6 relative (absolute near zero slope)
    constexpr int kCheckPoints = 100;
    for (int i = 0; i < kCheckPoints; ++i) {
        const double u = domain_hi * static_cast<double>(i + 1) / (kCheckPoints + 1);
        double h = std::min(6.06e-6 * (1.0 + u), 1e-3);
        h = std::min(h, 0.5 * u);
        const double fd = (f.eval_unchecked(u + h) - f.eval_unchecked(u - h)) / (2.0 * h);
        const double d = f.deriv_unchecked(u);
        const double scale = 1.0 + std::max(std::abs(fd), std::abs(d));
        if (!(std::abs(fd - d) <= 1e-6 * scale))
            throw InvalidParams(f.label() + ": derivative inconsistent with finite difference at u=" +
                                fmt_num(u));
    }

    return f;
}

Fn1D power_fn(double n, double domain_hi) {
    return make_function(FnKind::Power, {n}, domain_hi);
}

Fn1D scaled_power_fn(double c, double n, double domain_hi) {
    return make_function(FnKind::ScaledPower, {c, n}, domain_hi);
}

Fn1D polynomial_fn(const std::vector<double>& coeffs, double domain_hi) {
    return make_function(FnKind::Polynomial, coeffs, domain_hi);
}

Fn1D exponential_fn(double domain_hi) {
    return make_function(FnKind::Exponential, {}, domain_hi);
}

Fn1D constant_fn(double c, double domain_hi) {
    return make_function(FnKind::Constant, {c}, domain_hi);
}

} // namespace hhmc
