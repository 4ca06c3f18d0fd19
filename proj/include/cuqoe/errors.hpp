#pragma once

#include <stdexcept>
#include <string>

namespace cuqoe {

/// Argument outside the domain of a physical formula (v >= 1, negative
/// duration, ...). The CLI maps this to exit code 1 together with ConfigError.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Invalid engine or sweep configuration.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Numerical failure: quadrature did not converge, extrapolation was
/// unstable, a non-finite value was produced, or the oracle disagreed.
/// The CLI maps this to exit code 2.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConvergenceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class ExtrapolationError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class OracleMismatchError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace cuqoe
