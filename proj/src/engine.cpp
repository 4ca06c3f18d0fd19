#include "cuqoe/engine.hpp"

#include <cmath>
#include <string>

#include "cuqoe/errors.hpp"
#include "cuqoe/response.hpp"

namespace cuqoe {

CycleConfig::CycleConfig(CircularMotion hot, CircularMotion cold, double e1, double e2,
                         std::optional<double> population)
    : hot_(hot), cold_(cold), e1_(e1), e2_(e2), population_(population) {}

CycleConfig CycleConfig::build(CircularMotion hot, CircularMotion cold, double e1, double e2,
                               std::optional<double> population) {
    if (hot.speed() != cold.speed()) {
        throw ConfigError("CycleConfig: hot and cold motions must share the same speed");
    }
    if (!(hot.acceleration() > cold.acceleration())) {
        throw ConfigError("CycleConfig: hot contact needs the tighter circle (a_H > a_C, R_hot < R_cold)");
    }
    if (!(e1 > 0.0 && e1 < e2) || !std::isfinite(e2)) {
        throw ConfigError("CycleConfig: gaps must satisfy 0 < E1 < E2");
    }
    if (population && !(*population >= 0.0 && *population <= 1.0)) {
        throw ConfigError("CycleConfig: population must lie in [0, 1]");
    }
    return CycleConfig(hot, cold, e1, e2, population);
}

CycleConfig CycleConfig::from_accelerations(double v, double a_hot, double a_cold, double e1, double e2,
                                            std::optional<double> population) {
    try {
        return build(CircularMotion::from_acceleration(v, a_hot), CircularMotion::from_acceleration(v, a_cold), e1,
                     e2, population);
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
}

CycleConfig CycleConfig::from_radii(double v, double r_hot, double r_cold, double e1, double e2,
                                    std::optional<double> population) {
    try {
        return build(CircularMotion::from_radius(v, r_hot), CircularMotion::from_radius(v, r_cold), e1, e2,
                     population);
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
}

CycleConfig CycleConfig::from_motions(const CircularMotion& hot, const CircularMotion& cold, double e1, double e2,
                                      std::optional<double> population) {
    return build(hot, cold, e1, e2, population);
}

BathContact CycleConfig::hot() const noexcept {
    return {e2_, hot_.half_circle_duration(), hot_.acceleration()};
}

BathContact CycleConfig::cold() const noexcept {
    return {e1_, cold_.half_circle_duration(), cold_.acceleration()};
}

double transition_probability(double population, double gap, double duration, double acceleration) {
    if (!(population >= 0.0 && population <= 1.0)) {
        throw DomainError("transition_probability: population must lie in [0, 1]");
    }
    if (!(gap > 0.0)) {
        throw DomainError("transition_probability: gap must be positive");
    }
    const double up = response(gap, duration, acceleration);
    const double down = response(-gap, duration, acceleration);
    return (1.0 - population) * up - population * down;
}

double transition_probability(double population, const BathContact& contact) {
    return transition_probability(population, contact.gap, contact.duration, contact.acceleration);
}

double p_cyc(const CycleConfig& config) { return p_cyc(config.hot(), config.cold()); }

double p_cyc(const BathContact& hot, const BathContact& cold) {
    const double up = response(hot.gap, hot.duration, hot.acceleration) +
                      response(cold.gap, cold.duration, cold.acceleration);
    const double down = response(-hot.gap, hot.duration, hot.acceleration) +
                        response(-cold.gap, cold.duration, cold.acceleration);
    const double denominator = up + down;
    if (denominator == 0.0 || !std::isfinite(denominator)) {
        throw NumericalError("p_cyc: degenerate configuration, response sum is " + std::to_string(denominator));
    }
    return up / denominator;
}

double operating_population(const CycleConfig& config) {
    if (const auto p = config.population()) {
        return *p;
    }
    return p_cyc(config);
}

StrokeLedger stroke_ledger(const CycleConfig& config, double population) {
    return stroke_ledger(config.hot(), config.gap_low(), population);
}

StrokeLedger stroke_ledger(const BathContact& hot, double gap_low, double population) {
    if (!(population >= 0.0 && population <= 1.0)) {
        throw DomainError("stroke_ledger: population must lie in [0, 1]");
    }
    const double dp_hot = transition_probability(population, hot);
    const double e1 = gap_low;
    const double e2 = hot.gap;
    const double gap_change = e2 - e1;

    StrokeLedger ledger;
    ledger.delta_p_hot = dp_hot;
    ledger.w1 = population * gap_change;
    ledger.q2 = e2 * dp_hot;
    ledger.w3 = -(population + dp_hot) * gap_change;
    ledger.q4 = -e1 * dp_hot;
    ledger.w_total = ledger.w1 + ledger.w2 + ledger.w3 + ledger.w4;
    ledger.q_total = ledger.q1 + ledger.q2 + ledger.q3 + ledger.q4;
    return ledger;
}

double extracted_work(const CycleConfig& config) { return extracted_work(config.hot(), config.cold()); }

double extracted_work(const BathContact& hot, const BathContact& cold) {
    const double dp_hot = transition_probability(p_cyc(hot, cold), hot);
    return dp_hot * (hot.gap - cold.gap);
}

double efficiency(double gap_low, double gap_high) {
    if (!(gap_high > 0.0)) {
        throw DomainError("efficiency: upper gap must be positive");
    }
    return 1.0 - gap_low / gap_high;
}

double efficiency(const CycleConfig& config) { return efficiency(config.gap_low(), config.gap_high()); }

}  // namespace cuqoe
