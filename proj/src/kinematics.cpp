#include "cuqoe/kinematics.hpp"

#include <cmath>
#include <string>

#include "cuqoe/errors.hpp"
#include "cuqoe/units.hpp"

namespace cuqoe {

double lorentz_gamma(double v) {
    if (!(v >= 0.0 && v < 1.0)) {
        throw DomainError("lorentz_gamma: speed must satisfy 0 <= v < 1, got " + std::to_string(v));
    }
    // (1 - v)(1 + v) keeps precision for v close to 1.
    return 1.0 / std::sqrt((1.0 - v) * (1.0 + v));
}

namespace {

void require_speed(double v) {
    if (!(v > 0.0 && v < 1.0)) {
        throw DomainError("CircularMotion: speed must satisfy 0 < v < 1, got " + std::to_string(v));
    }
}

}  // namespace

CircularMotion CircularMotion::from_radius(double v, double radius) {
    require_speed(v);
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw DomainError("CircularMotion: radius must be positive and finite, got " + std::to_string(radius));
    }
    const double gamma = lorentz_gamma(v);
    return CircularMotion(v, gamma, radius, gamma * gamma * v * v / radius);
}

CircularMotion CircularMotion::from_acceleration(double v, double acceleration) {
    require_speed(v);
    if (!(acceleration > 0.0) || !std::isfinite(acceleration)) {
        throw DomainError("CircularMotion: acceleration must be positive and finite, got " +
                          std::to_string(acceleration));
    }
    const double gamma = lorentz_gamma(v);
    return CircularMotion(v, gamma, gamma * gamma * v * v / acceleration, acceleration);
}

double CircularMotion::half_circle_duration() const noexcept {
    return units::pi * radius_ / (gamma_ * v_);
}

double centripetal_acceleration(const CircularMotion& motion) noexcept {
    return motion.acceleration();
}

double half_circle_duration(const CircularMotion& motion) noexcept {
    return motion.half_circle_duration();
}

Event trajectory_point(double tau, const CircularMotion& motion) noexcept {
    const double r = motion.radius();
    const double phase = motion.speed() * motion.gamma() * tau / r;
    return {motion.gamma() * tau, r * std::cos(phase), r * std::sin(phase), 0.0};
}

double switching(double tau, double duration) {
    if (!(duration > 0.0)) {
        throw DomainError("switching: duration must be positive");
    }
    const double half_sq = 0.25 * duration * duration;
    return half_sq / (tau * tau + half_sq);
}

double unruh_temperature(double acceleration) {
    if (!(acceleration >= 0.0)) {
        throw DomainError("unruh_temperature: acceleration must be non-negative");
    }
    return units::hbar * acceleration / (2.0 * units::pi * units::k_B * units::c);
}

}  // namespace cuqoe
