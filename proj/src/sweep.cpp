#include "cuqoe/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <string>
#include <thread>

#include "cuqoe/engine.hpp"
#include "cuqoe/errors.hpp"
#include "cuqoe/kinematics.hpp"
#include "cuqoe/oracle.hpp"
#include "cuqoe/response.hpp"

namespace cuqoe {

namespace {

constexpr double kDefaultGapLow = 1.0;

bool needs_cycle(const SweepSpec& spec) {
    if (!spec.population && spec.series != SeriesVariable::Population) {
        return true;
    }
    return std::any_of(spec.outputs.begin(), spec.outputs.end(), [](SweepOutput o) {
        return o == SweepOutput::PCyc || o == SweepOutput::WExt || o == SweepOutput::Efficiency ||
               o == SweepOutput::Ledger || o == SweepOutput::DurationCold;
    });
}

// Everything a grid point needs, resolved from the spec.
struct PointSetup {
    CircularMotion hot_motion;
    BathContact hot;
    std::optional<BathContact> cold;
    double gap_low = 0.0;
    std::optional<double> population;
};

std::optional<double> series_override(const SweepSpec& spec, SeriesVariable which, std::optional<double> value,
                                      std::optional<double> fallback) {
    if (spec.series == which && value) {
        return value;
    }
    return fallback;
}

PointSetup resolve_point(const SweepSpec& spec, std::optional<double> series_value, double x) {
    const double v = series_override(spec, SeriesVariable::Speed, series_value, spec.speed).value();
    const std::optional<double> population =
        series_override(spec, SeriesVariable::Population, series_value, spec.population);
    const std::optional<double> fixed_accel_hot =
        series_override(spec, SeriesVariable::AccelHot, series_value, spec.accel_hot);

    const auto hot_motion = [&]() {
        switch (spec.swept) {
            case SweptVariable::AccelHot:
                return CircularMotion::from_acceleration(v, x);
            case SweptVariable::RadiusHot:
                return CircularMotion::from_radius(v, x);
            case SweptVariable::GapDifference:
                break;
        }
        if (fixed_accel_hot) {
            return CircularMotion::from_acceleration(v, *fixed_accel_hot);
        }
        if (spec.radius_hot) {
            return CircularMotion::from_radius(v, *spec.radius_hot);
        }
        throw ConfigError("sweep: hot contact needs a_H or R_hot");
    }();

    const double gap_low = spec.gap_low.value_or(kDefaultGapLow);
    double gap_high = 0.0;
    if (spec.swept == SweptVariable::GapDifference) {
        gap_high = gap_low + x;
    } else if (spec.gap_high) {
        gap_high = *spec.gap_high;
    } else if (spec.gap_difference) {
        gap_high = gap_low + *spec.gap_difference;
    } else {
        throw ConfigError("sweep: hot gap needs E2 or delta_E");
    }
    if (!(gap_high > 0.0)) {
        throw ConfigError("sweep: hot gap must be positive");
    }

    PointSetup setup{hot_motion, {gap_high, hot_motion.half_circle_duration(), hot_motion.acceleration()},
                     std::nullopt, gap_low, population};

    if (needs_cycle(spec)) {
        std::optional<CircularMotion> cold_motion;
        if (spec.accel_cold) {
            cold_motion = CircularMotion::from_acceleration(v, *spec.accel_cold);
        } else if (spec.radius_cold) {
            cold_motion = CircularMotion::from_radius(v, *spec.radius_cold);
        } else {
            throw ConfigError("sweep: requested outputs need a cold contact (a_C or R_cold)");
        }
        const CycleConfig config = CycleConfig::from_motions(hot_motion, *cold_motion, gap_low, gap_high, population);
        setup.hot = config.hot();
        setup.cold = config.cold();
    } else if (population && !(*population >= 0.0 && *population <= 1.0)) {
        throw ConfigError("sweep: population must lie in [0, 1]");
    }

    if (spec.decoupled_duration) {
        setup.hot.duration = spec.duration_hot.value();
    }
    return setup;
}

double oracle_deviation(const SweepSpec& spec, const PointSetup& setup) {
    std::vector<ResponseQuery> queries{{setup.hot.gap, setup.hot.duration, setup.hot.acceleration},
                                       {-setup.hot.gap, setup.hot.duration, setup.hot.acceleration}};
    if (setup.cold) {
        queries.push_back({setup.cold->gap, setup.cold->duration, setup.cold->acceleration});
        queries.push_back({-setup.cold->gap, setup.cold->duration, setup.cold->acceleration});
    }
    double worst = 0.0;
    for (const auto& q : queries) {
        const double closed = response(q);
        const double numeric = response_extrapolated(q, QuadratureSpec::for_query(q)).value;
        const double diff = std::abs(closed - numeric);
        if (diff > std::max(spec.oracle_tolerance * std::abs(closed), 1e-6)) {
            throw OracleMismatchError("sweep oracle check: closed form " + std::to_string(closed) + " vs quadrature " +
                                      std::to_string(numeric) + " at E=" + std::to_string(q.energy) +
                                      " T=" + std::to_string(q.duration) + " a=" + std::to_string(q.acceleration));
        }
        worst = std::max(worst, diff / std::abs(closed));
    }
    return worst;
}

SweepRow evaluate_point(const SweepSpec& spec, std::optional<double> series_value, double x, bool check_oracle) {
    const PointSetup setup = resolve_point(spec, series_value, x);

    SweepRow row;
    row.series_value = series_value;
    row.swept_value = x;
    row.duration_hot = setup.hot.duration;
    row.gamma = setup.hot_motion.gamma();
    if (setup.cold) {
        row.duration_cold = setup.cold->duration;
    }

    std::optional<double> cycle_population;
    const auto pcyc = [&]() {
        if (!cycle_population) {
            cycle_population = p_cyc(setup.hot, *setup.cold);
        }
        return *cycle_population;
    };
    const double population = setup.population ? *setup.population : pcyc();

    for (SweepOutput out : spec.outputs) {
        switch (out) {
            case SweepOutput::DeltaPHot:
                row.values.push_back(transition_probability(population, setup.hot));
                break;
            case SweepOutput::PCyc:
                row.values.push_back(pcyc());
                break;
            case SweepOutput::WExt:
                row.values.push_back(transition_probability(population, setup.hot) *
                                     (setup.hot.gap - setup.gap_low));
                break;
            case SweepOutput::Efficiency:
                row.values.push_back(efficiency(setup.gap_low, setup.hot.gap));
                break;
            case SweepOutput::Ledger: {
                const StrokeLedger l = stroke_ledger(setup.hot, setup.gap_low, population);
                for (double value : {l.q1, l.q2, l.q3, l.q4, l.w1, l.w2, l.w3, l.w4, l.w_total, l.q_total}) {
                    row.values.push_back(value);
                }
                break;
            }
            case SweepOutput::DurationHot:
                row.values.push_back(row.duration_hot);
                break;
            case SweepOutput::DurationCold:
                row.values.push_back(row.duration_cold.value());
                break;
            case SweepOutput::Gamma:
                row.values.push_back(row.gamma);
                break;
        }
    }
    for (double value : row.values) {
        if (!std::isfinite(value)) {
            throw NumericalError("sweep: non-finite output at " + std::string(to_string(spec.swept)) + "=" +
                                 std::to_string(x));
        }
    }
    if (check_oracle) {
        row.oracle_deviation = oracle_deviation(spec, setup);
    }
    return row;
}

std::vector<std::optional<double>> series_list(const SweepSpec& spec) {
    if (spec.series == SeriesVariable::None) {
        return {std::nullopt};
    }
    return {spec.series_values.begin(), spec.series_values.end()};
}

}  // namespace

std::vector<double> Grid::points() const {
    if (count < 2) {
        throw ConfigError("grid: count must be at least 2");
    }
    if (!(min < max) || !std::isfinite(min) || !std::isfinite(max)) {
        throw ConfigError("grid: need finite min < max");
    }
    if (spacing == GridSpacing::Log && !(min > 0.0)) {
        throw ConfigError("grid: log spacing needs min > 0");
    }
    std::vector<double> pts(count);
    const double last = static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
        const double s = static_cast<double>(i) / last;
        pts[i] = spacing == GridSpacing::Linear ? min + s * (max - min)
                                                : std::exp(std::log(min) + s * (std::log(max) - std::log(min)));
    }
    pts.front() = min;
    pts.back() = max;
    return pts;
}

std::string_view to_string(SweptVariable v) {
    switch (v) {
        case SweptVariable::AccelHot:
            return "a_H";
        case SweptVariable::RadiusHot:
            return "R_hot";
        case SweptVariable::GapDifference:
            return "delta_E";
    }
    return "?";
}

std::string_view to_string(SeriesVariable v) {
    switch (v) {
        case SeriesVariable::None:
            return "none";
        case SeriesVariable::Population:
            return "p";
        case SeriesVariable::Speed:
            return "v";
        case SeriesVariable::AccelHot:
            return "a_H";
    }
    return "?";
}

std::vector<std::string> SweepSpec::columns() const {
    std::vector<std::string> cols;
    if (series != SeriesVariable::None) {
        cols.emplace_back(to_string(series));
    }
    cols.emplace_back(to_string(swept));
    for (SweepOutput out : outputs) {
        switch (out) {
            case SweepOutput::DeltaPHot:
                cols.emplace_back("delta_p_H");
                break;
            case SweepOutput::PCyc:
                cols.emplace_back("p_cyc");
                break;
            case SweepOutput::WExt:
                cols.emplace_back("W_ext");
                break;
            case SweepOutput::Efficiency:
                cols.emplace_back("efficiency");
                break;
            case SweepOutput::Ledger:
                for (const char* name : {"Q1", "Q2", "Q3", "Q4", "W1", "W2", "W3", "W4", "W_total", "Q_total"}) {
                    cols.emplace_back(name);
                }
                break;
            case SweepOutput::DurationHot:
                cols.emplace_back("T_H");
                break;
            case SweepOutput::DurationCold:
                cols.emplace_back("T_C");
                break;
            case SweepOutput::Gamma:
                cols.emplace_back("gamma");
                break;
        }
    }
    return cols;
}

void SweepSpec::validate() const {
    if (outputs.empty()) {
        throw ConfigError("sweep: no outputs requested");
    }
    if (series != SeriesVariable::None && series_values.empty()) {
        throw ConfigError("sweep: series variable given without values");
    }
    if (series == SeriesVariable::None && !series_values.empty()) {
        throw ConfigError("sweep: series values given without a series variable");
    }
    if (series == SeriesVariable::AccelHot && swept != SweptVariable::GapDifference) {
        throw ConfigError("sweep: a_H can only be a series variable when delta_E is swept");
    }
    if (decoupled_duration && !(duration_hot && *duration_hot > 0.0)) {
        throw ConfigError("sweep: decoupled duration needs a positive T_H");
    }
    if (!decoupled_duration && duration_hot) {
        throw ConfigError("sweep: T_H is only accepted together with decoupled_T");
    }
    if (accel_hot && radius_hot) {
        throw ConfigError("sweep: give either a_H or R_hot, not both");
    }
    if (accel_cold && radius_cold) {
        throw ConfigError("sweep: give either a_C or R_cold, not both");
    }
    if (gap_high && gap_difference) {
        throw ConfigError("sweep: give either E2 or delta_E, not both");
    }
    if (!(oracle_tolerance > 0.0) || oracle_stride < 1) {
        throw ConfigError("sweep: oracle tolerance and stride must be positive");
    }
    const auto pts = grid.points();
    for (const auto& s : series_list(*this)) {
        for (double x : pts) {
            try {
                (void)resolve_point(*this, s, x);
            } catch (const DomainError& e) {
                throw ConfigError(std::string("sweep: invalid grid point ") + std::string(to_string(swept)) + "=" +
                                  std::to_string(x) + ": " + e.what());
            } catch (const ConfigError& e) {
                throw ConfigError(std::string("sweep: invalid grid point ") + std::string(to_string(swept)) + "=" +
                                  std::to_string(x) + ": " + e.what());
            }
        }
    }
}

SweepResult run_sweep(const SweepSpec& spec, unsigned jobs) {
    spec.validate();
    const auto pts = spec.grid.points();
    const auto series = series_list(spec);

    struct Task {
        std::optional<double> series_value;
        double x;
        bool check_oracle;
    };
    std::vector<Task> tasks;
    tasks.reserve(series.size() * pts.size());
    for (const auto& s : series) {
        for (std::size_t i = 0; i < pts.size(); ++i) {
            tasks.push_back({s, pts[i], spec.oracle_check && i % spec.oracle_stride == 0});
        }
    }

    std::vector<SweepRow> rows(tasks.size());
    std::vector<std::exception_ptr> failures(tasks.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                rows[i] = evaluate_point(spec, tasks[i].series_value, tasks[i].x, tasks[i].check_oracle);
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };

    const unsigned n_threads = std::clamp<unsigned>(jobs, 1u, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) {
            pool.emplace_back(worker);
        }
    }
    // Report the first failure in grid order, independent of scheduling.
    for (const auto& f : failures) {
        if (f) {
            std::rethrow_exception(f);
        }
    }
    return {spec.columns(), std::move(rows)};
}

namespace {

// Log-spaced acceleration grid shared by the a_H presets.
constexpr double kAccelGridMax = 500.0;
constexpr std::size_t kAccelGridCount = 100;

Grid accel_grid(double accel_cold) {
    return {std::max(accel_cold + 1.0, 15.0), kAccelGridMax, kAccelGridCount, GridSpacing::Log};
}

}  // namespace

SweepSpec preset(std::string_view id) {
    SweepSpec spec;
    spec.name = std::string(id);
    if (id == "fig2" || id == "fig3") {
        // delta p_H vs a_H (fig2) or R_hot (fig3) for several initial populations.
        spec.speed = 0.999;
        spec.gap_high = 1.0;
        spec.series = SeriesVariable::Population;
        spec.series_values = {0.0, 0.25, 0.5, 0.75};
        spec.outputs = {SweepOutput::DeltaPHot};
        if (id == "fig2") {
            spec.swept = SweptVariable::AccelHot;
            spec.grid = {15.0, kAccelGridMax, kAccelGridCount, GridSpacing::Log};
        } else {
            // Same circles as fig2, indexed by radius R = gamma^2 v^2 / a.
            const double g = lorentz_gamma(spec.speed);
            const double gv2 = g * g * spec.speed * spec.speed;
            spec.swept = SweptVariable::RadiusHot;
            spec.grid = {gv2 / kAccelGridMax, gv2 / 15.0, kAccelGridCount, GridSpacing::Log};
        }
        return spec;
    }
    if (id == "fig4" || id == "fig5") {
        // p_cyc (fig4) or W_ext (fig5) vs a_H for several speeds, a_C = 15, dE = 1.
        spec.swept = SweptVariable::AccelHot;
        spec.accel_cold = 15.0;
        spec.grid = accel_grid(*spec.accel_cold);
        spec.speed = 0.999;
        spec.gap_low = 1.0;
        spec.gap_high = 2.0;
        spec.series = SeriesVariable::Speed;
        spec.series_values = {0.9, 0.99, 0.999};
        spec.outputs = {id == "fig4" ? SweepOutput::PCyc : SweepOutput::WExt};
        return spec;
    }
    if (id == "fig6") {
        // W_ext vs gap difference for several hot accelerations, a_C = 20, v = 0.999.
        spec.swept = SweptVariable::GapDifference;
        spec.grid = {0.01, 10.0, 200, GridSpacing::Linear};
        spec.speed = 0.999;
        spec.accel_cold = 20.0;
        spec.gap_low = 1.0;
        spec.series = SeriesVariable::AccelHot;
        spec.series_values = {30.0, 50.0, 100.0};
        spec.outputs = {SweepOutput::WExt};
        return spec;
    }
    throw ConfigError("unknown preset '" + std::string(id) + "' (expected fig2..fig6)");
}

std::vector<std::string> preset_ids() { return {"fig2", "fig3", "fig4", "fig5", "fig6"}; }

}  // namespace cuqoe
