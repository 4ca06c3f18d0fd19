#include "cuqoe/correlation.hpp"

#include <cmath>

#include "cuqoe/errors.hpp"
#include "cuqoe/units.hpp"

namespace cuqoe {

namespace {

constexpr double kPrefactor = -1.0 / (4.0 * units::pi * units::pi);

// x - sin(x) without cancellation for small |x|.
double x_minus_sin(double x) {
    if (std::abs(x) > 0.25) {
        return x - std::sin(x);
    }
    // x^3/3! - x^5/5! + x^7/7! - ...; |x| <= 0.25 converges to roundoff in 8 terms.
    const double x2 = x * x;
    double term = x * x2 / 6.0;
    double sum = term;
    for (int k = 2; k <= 9; ++k) {
        term *= -x2 / ((2.0 * k) * (2.0 * k + 1.0));
        sum += term;
    }
    return sum;
}

}  // namespace

RegulatorEta::RegulatorEta(double eta) : eta_(eta) {
    if (!(eta > 0.0) || !std::isfinite(eta)) {
        throw DomainError("RegulatorEta: eta must be positive and finite");
    }
}

std::complex<double> wightman_circular_exact(double dtau, const CircularMotion& motion, RegulatorEta eta) {
    const double gamma = motion.gamma();
    const double r = motion.radius();
    const double x = motion.speed() * gamma * dtau / (2.0 * r);
    const double e = eta.value();

    // (gamma dtau)^2 - 4R^2 sin^2 x = dtau^2 + 4R^2 (x - sin x)(x + sin x)
    const double chord_defect = 4.0 * r * r * x_minus_sin(x) * (x + std::sin(x));
    const double re = dtau * dtau + chord_defect - e * e;
    const double im = -2.0 * e * gamma * dtau;
    return kPrefactor / std::complex<double>(re, im);
}

std::complex<double> wightman_ultra(double dtau, double acceleration, double eta) {
    if (!(acceleration > 0.0)) {
        throw DomainError("wightman_ultra: acceleration must be positive");
    }
    if (eta < 0.0) {
        throw DomainError("wightman_ultra: eta must be non-negative");
    }
    if (eta == 0.0 && dtau == 0.0) {
        throw DomainError("wightman_ultra: coincidence limit dtau = 0 is singular without a regulator");
    }
    const std::complex<double> shifted(dtau, -eta);
    const double quartic = acceleration * acceleration * dtau * dtau * dtau * dtau / 12.0;
    return kPrefactor / (shifted * shifted + quartic);
}

}  // namespace cuqoe
