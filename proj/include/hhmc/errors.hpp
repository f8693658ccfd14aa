#pragma once

#include <stdexcept>

namespace hhmc {

/// Bad arguments to an operation (wrong exponent, malformed spec, q out of range).
struct InvalidParams : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An evaluation point outside a function's declared domain.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// An integrand or oracle target produced NaN or infinity.
struct NonFiniteSample : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed sweep configuration.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace hhmc
