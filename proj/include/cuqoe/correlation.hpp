#pragma once

#include <complex>

#include "cuqoe/kinematics.hpp"

namespace cuqoe {

/// Pole-shift regulator eta > 0 of the i*eta prescription. The physical
/// quantities are the eta -> 0+ limit.
class RegulatorEta {
public:
    explicit RegulatorEta(double eta);
    double value() const noexcept { return eta_; }

private:
    double eta_;
};

/// Massless vacuum Wightman function pulled back to the circular trajectory,
///
///   -1/(4 pi^2) / [(gamma dtau - i eta)^2 - 4 R^2 sin^2(v gamma dtau / (2R))].
///
/// The real part of the denominator is rewritten as
/// dtau^2 + 4R^2 (x - sin x)(x + sin x), x = v gamma dtau / (2R), which avoids
/// the cancellation between gamma^2 dtau^2 and the chord length when gamma >> 1.
std::complex<double> wightman_circular_exact(double dtau, const CircularMotion& motion, RegulatorEta eta);

/// Ultra-relativistic reduction -1/(4 pi^2) / [(dtau - i eta)^2 + a^2 dtau^4 / 12].
/// eta may be zero; eta = 0 together with dtau = 0 throws DomainError.
std::complex<double> wightman_ultra(double dtau, double acceleration, double eta);

}  // namespace cuqoe
