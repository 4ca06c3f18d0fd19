#include "cuqoe/response.hpp"

#include <algorithm>
#include <cmath>

#include "cuqoe/errors.hpp"

namespace cuqoe {

namespace {

const double kSqrt12 = std::sqrt(12.0);

void require_positive_scales(double duration, double acceleration) {
    if (!(duration > 0.0) || !std::isfinite(duration)) {
        throw DomainError("response: duration must be positive and finite");
    }
    if (!(acceleration > 0.0) || !std::isfinite(acceleration)) {
        throw DomainError("response: acceleration must be positive and finite");
    }
}

}  // namespace

double ResponseQuery::pole_scale() const noexcept { return kSqrt12 / acceleration; }

double response_double_pole(double energy, double pole_scale) noexcept {
    const double eb = energy * pole_scale;
    return std::exp(-eb) * (eb + 3.0) / 32.0;
}

double response_positive(double energy, double duration, double acceleration) {
    require_positive_scales(duration, acceleration);
    if (!(energy >= 0.0) || !std::isfinite(energy)) {
        throw DomainError("response_positive: energy must be non-negative and finite");
    }
    const double b = kSqrt12 / acceleration;
    const double t = duration;
    if (std::abs(b - t) <= kPoleMergeTolerance * std::max(b, t)) {
        return response_double_pole(energy, b);
    }
    const double numerator = b * b * std::exp(-energy * t) - (t * t * t / b) * std::exp(-energy * b);
    return numerator / (16.0 * (b - t) * (b + t));
}

double response_negative(double energy, double duration, double acceleration) {
    if (!(energy > 0.0)) {
        throw DomainError("response_negative: energy magnitude must be positive");
    }
    return response_positive(energy, duration, acceleration) + energy * duration / 8.0;
}

double response(double energy, double duration, double acceleration) {
    if (energy >= 0.0) {
        return response_positive(energy, duration, acceleration);
    }
    return response_negative(-energy, duration, acceleration);
}

double response(const ResponseQuery& query) {
    return response(query.energy, query.duration, query.acceleration);
}

}  // namespace cuqoe
