#pragma once

// Numerical ground truth for the closed-form response function.
//
// The response integral is evaluated directly on the real m axis with the
// double pole at m = 0 shifted to m = i*eta, for a decreasing schedule of
// eta values, and the real part is extrapolated to eta -> 0. Nothing here
// calls into the closed forms of response.hpp.

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "cuqoe/response.hpp"

namespace cuqoe {

struct QuadratureSpec {
    /// Strictly decreasing, positive regulators.
    std::vector<double> eta_schedule{1e-2, 5e-3, 2.5e-3, 1.25e-3};
    /// Integration half-range M. Unset means 50 * max(T, b) at the point of use.
    std::optional<double> half_range;
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    std::size_t max_subdivisions = 4000;
    /// Relative tolerance of the eta -> 0 fit. Fit residuals above ten times
    /// this (scaled by the extrapolated value) abort with ExtrapolationError.
    double extrapolation_tol = 1e-4;

    /// Throws ConfigError when a field violates its invariant.
    void validate() const;

    /// Default spec with the eta schedule multiplied by `scale`. The default
    /// regulators are sized for pole scales of order one; queries whose T or
    /// sqrt(12)/a is much smaller need a proportionally smaller schedule.
    static QuadratureSpec for_scale(double scale);

    /// for_scale(min(1, T, sqrt(12)/a)).
    static QuadratureSpec for_query(const ResponseQuery& query);
};

struct QuadratureEstimate {
    std::complex<double> value;
    /// Quadrature error of real and imaginary parts plus the analytic bound on
    /// the truncated tails beyond |m| = M.
    double error;
};

/// -(T^3/(16 pi)) (12/a^2) * integral_{-M}^{M} e^{-iEm} /
///     [(m^2 + T^2) (m - i eta)^2 (m^2 + 12/a^2)] dm
QuadratureEstimate response_quadrature(const ResponseQuery& query, double eta, const QuadratureSpec& spec);

struct ExtrapolatedResponse {
    double value;
    double error;
    /// Imaginary part extrapolated with the same fit; zero in exact arithmetic.
    double imag;
    std::vector<double> etas;
    std::vector<std::complex<double>> samples;
};

/// Quadratures at every eta of the schedule, least-squares polynomial fit of
/// degree min(2, n - 1) in eta, evaluated at eta = 0.
ExtrapolatedResponse response_extrapolated(const ResponseQuery& query, const QuadratureSpec& spec);

struct ReductionCheck {
    double double_integral;
    double single_integral;
};

/// Both sides of the Lorentzian-switching reduction for a kernel g(tau - tau'):
///   double: integral integral w_T(tau) w_T(tau') g(tau - tau') dtau dtau'
///   single: (pi T^3 / 4) integral g(m) / (m^2 + T^2) dm
ReductionCheck lorentzian_reduction_check(const std::function<double(double)>& kernel, double duration);

}  // namespace cuqoe
