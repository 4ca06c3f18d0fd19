#pragma once

// Otto cycle of a qubit carried around two half circles: a tight one (hot
// contact, gap E2) and a wide one (cold contact, gap E1), joined by inertial
// legs on which the gap is switched adiabatically. All transition
// probabilities, heats and works are reported per lambda^2.

#include <optional>

#include "cuqoe/kinematics.hpp"

namespace cuqoe {

/// One bath contact: gap held fixed during a half circle of the given
/// duration at the given centripetal acceleration.
struct BathContact {
    double gap;
    double duration;
    double acceleration;
};

class CycleConfig {
public:
    /// Throws ConfigError unless a_hot > a_cold > 0, 0 < e1 < e2 and
    /// p (when present) lies in [0, 1].
    static CycleConfig from_accelerations(double v, double a_hot, double a_cold, double e1, double e2,
                                          std::optional<double> population = std::nullopt);
    static CycleConfig from_radii(double v, double r_hot, double r_cold, double e1, double e2,
                                  std::optional<double> population = std::nullopt);
    /// Both motions must share the same speed.
    static CycleConfig from_motions(const CircularMotion& hot, const CircularMotion& cold, double e1, double e2,
                                    std::optional<double> population = std::nullopt);

    const CircularMotion& hot_motion() const noexcept { return hot_; }
    const CircularMotion& cold_motion() const noexcept { return cold_; }
    double speed() const noexcept { return hot_.speed(); }
    double gap_low() const noexcept { return e1_; }
    double gap_high() const noexcept { return e2_; }
    /// Initial excited-state population; empty means "use p_cyc".
    std::optional<double> population() const noexcept { return population_; }

    /// (E2, pi R_hot / (gamma v), a_hot)
    BathContact hot() const noexcept;
    /// (E1, pi R_cold / (gamma v), a_cold)
    BathContact cold() const noexcept;

private:
    CycleConfig(CircularMotion hot, CircularMotion cold, double e1, double e2, std::optional<double> population);
    static CycleConfig build(CircularMotion hot, CircularMotion cold, double e1, double e2,
                             std::optional<double> population);

    CircularMotion hot_;
    CircularMotion cold_;
    double e1_;
    double e2_;
    std::optional<double> population_;
};

/// Per-stroke energy bookkeeping. Totals are the sums of the four strokes.
struct StrokeLedger {
    double q1 = 0.0;
    double q2 = 0.0;
    double q3 = 0.0;
    double q4 = 0.0;
    double w1 = 0.0;
    double w2 = 0.0;
    double w3 = 0.0;
    double w4 = 0.0;
    double w_total = 0.0;
    double q_total = 0.0;
    /// delta p_H / lambda^2 used to build the ledger.
    double delta_p_hot = 0.0;
};

/// delta p / lambda^2 = (1 - p) F(E, T) - p F(-E, T).
double transition_probability(double population, double gap, double duration, double acceleration);
double transition_probability(double population, const BathContact& contact);

/// Population that closes the cycle, delta p_H(p) + delta p_C(p) = 0.
double p_cyc(const CycleConfig& config);
/// Same from raw contacts; no ordering between the two is required.
double p_cyc(const BathContact& hot, const BathContact& cold);

/// The configured population, or p_cyc when none was given.
double operating_population(const CycleConfig& config);

/// W1 = p dE, Q2 = E2 dp_H, W3 = -(p + dp_H) dE, Q4 = -E1 dp_H, dE = E2 - E1.
StrokeLedger stroke_ledger(const CycleConfig& config, double population);
StrokeLedger stroke_ledger(const BathContact& hot, double gap_low, double population);

/// delta p_H(p_cyc) (E2 - E1).
double extracted_work(const CycleConfig& config);
double extracted_work(const BathContact& hot, const BathContact& cold);

/// 1 - E1/E2; no kinematic dependence.
double efficiency(double gap_low, double gap_high);
double efficiency(const CycleConfig& config);

}  // namespace cuqoe
