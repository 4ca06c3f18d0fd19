#pragma once

namespace cuqoe {

/// Lorentz factor 1/sqrt(1 - v^2) for 0 <= v < 1. Throws DomainError otherwise.
double lorentz_gamma(double v);

/// A detector moving at constant speed v on a circle of radius R.
///
/// Both constructors enforce 0 < v < 1 and R > 0 (equivalently a > 0). The
/// value fixed at construction (R or a) is stored exactly and the other one is
/// derived through a = gamma^2 v^2 / R, so a sweep over accelerations sees the
/// grid values bit for bit.
class CircularMotion {
public:
    static CircularMotion from_radius(double v, double radius);
    static CircularMotion from_acceleration(double v, double acceleration);

    double speed() const noexcept { return v_; }
    double radius() const noexcept { return radius_; }
    double gamma() const noexcept { return gamma_; }

    /// Centripetal (proper) acceleration gamma^2 v^2 / R.
    double acceleration() const noexcept { return accel_; }

    /// Coordinate angular velocity v / R.
    double angular_velocity() const noexcept { return v_ / radius_; }

    /// Proper time needed to traverse half the circle, pi R / (gamma v).
    double half_circle_duration() const noexcept;

private:
    CircularMotion(double v, double gamma, double radius, double accel)
        : v_(v), gamma_(gamma), radius_(radius), accel_(accel) {}

    double v_;
    double gamma_;
    double radius_;
    double accel_;
};

double centripetal_acceleration(const CircularMotion& motion) noexcept;
double half_circle_duration(const CircularMotion& motion) noexcept;

/// Minkowski event (t, x, y, z).
struct Event {
    double t;
    double x;
    double y;
    double z;
};

/// Position on the circle at proper time tau:
/// (gamma tau, R cos(v gamma tau / R), R sin(v gamma tau / R), 0).
Event trajectory_point(double tau, const CircularMotion& motion) noexcept;

/// Lorentzian switching profile (T/2)^2 / (tau^2 + (T/2)^2). Throws
/// DomainError when duration <= 0.
double switching(double tau, double duration);

/// a / (2 pi). Throws DomainError for negative acceleration.
double unruh_temperature(double acceleration);

}  // namespace cuqoe
