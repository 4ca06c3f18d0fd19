#pragma once

namespace cuqoe {

/// Relative distance |b - T| / max(b, T) below which the two lower-half-plane
/// poles are treated as one double pole.
inline constexpr double kPoleMergeTolerance = 1e-6;

/// Argument triple of the response function F(E, T) for a detector with
/// centripetal acceleration a. The second pole scale b = sqrt(12)/a comes from
/// the quartic term of the ultra-relativistic Wightman function.
struct ResponseQuery {
    double energy;        // signed gap E
    double duration;      // interaction timescale T of the Lorentzian switching
    double acceleration;  // a

    double pole_scale() const noexcept;
};

/// Response for a non-negative gap, from the residues at m = -iT and m = -ib:
///
///   F(E, T) = [b^2 e^{-E T} - (T^3 / b) e^{-E b}] / (16 (b^2 - T^2)).
///
/// When b and T merge the expression is 0/0 and the double-pole limit
/// e^{-E b} (E b + 3) / 32 is returned instead.
double response_positive(double energy, double duration, double acceleration);

/// Response at gap -E (E > 0): the upper-half-plane contour additionally
/// encloses the regulated double pole at m = i eta, which contributes E T / 8.
double response_negative(double energy, double duration, double acceleration);

/// Signed dispatch: E >= 0 uses response_positive, E < 0 response_negative(|E|).
double response(double energy, double duration, double acceleration);
double response(const ResponseQuery& query);

/// Double-pole value e^{-E b}(E b + 3)/32 at b = T.
double response_double_pole(double energy, double pole_scale) noexcept;

}  // namespace cuqoe
