#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cuqoe {

enum class SweptVariable { AccelHot, RadiusHot, GapDifference };
enum class SeriesVariable { None, Population, Speed, AccelHot };
enum class GridSpacing { Linear, Log };

/// Requested per-row quantities. Ledger expands to ten columns.
enum class SweepOutput { DeltaPHot, PCyc, WExt, Efficiency, Ledger, DurationHot, DurationCold, Gamma };

struct Grid {
    double min = 0.0;
    double max = 0.0;
    std::size_t count = 0;
    GridSpacing spacing = GridSpacing::Linear;

    /// Ascending points with both endpoints hit exactly.
    std::vector<double> points() const;
};

/// Declarative parameter sweep.
///
/// The hot contact always uses the hot gap E2 (given directly, or E1 + dE).
/// Its duration is pi R_hot / (gamma v) at every grid point unless
/// decoupled_duration is set, in which case duration_hot is used as is.
/// A cold contact (a_C or R_cold, with E1) is only required by outputs that
/// involve the full cycle and by population = "cyc".
struct SweepSpec {
    std::string name = "custom";
    SweptVariable swept = SweptVariable::AccelHot;
    Grid grid;

    double speed = 0.0;
    std::optional<double> accel_hot;
    std::optional<double> radius_hot;
    std::optional<double> accel_cold;
    std::optional<double> radius_cold;
    std::optional<double> gap_low;
    std::optional<double> gap_high;
    std::optional<double> gap_difference;
    /// Empty means the cycle population p_cyc.
    std::optional<double> population;

    bool decoupled_duration = false;
    std::optional<double> duration_hot;

    SeriesVariable series = SeriesVariable::None;
    std::vector<double> series_values;

    std::vector<SweepOutput> outputs;
    bool oracle_check = false;
    /// Relative closed-form vs quadrature deviation tolerated by the oracle check.
    double oracle_tolerance = 1e-3;
    /// Oracle check runs on every n-th grid point of each series.
    std::size_t oracle_stride = 10;

    /// Checks field invariants and that every grid point of every series
    /// yields a valid configuration. Throws ConfigError.
    void validate() const;

    /// CSV header: [series column], swept column, output columns.
    std::vector<std::string> columns() const;
};

struct SweepRow {
    std::optional<double> series_value;
    double swept_value = 0.0;
    /// One value per output column, in column order.
    std::vector<double> values;
    double duration_hot = 0.0;
    std::optional<double> duration_cold;
    double gamma = 0.0;
    /// Largest relative closed-form vs oracle deviation over the response
    /// values this row depends on, on rows selected for checking.
    std::optional<double> oracle_deviation;
};

struct SweepResult {
    std::vector<std::string> columns;
    std::vector<SweepRow> rows;
};

/// Evaluates every grid point of every series. Rows are ordered by series
/// (in the given order), then by swept value ascending; the result does not
/// depend on `jobs`.
SweepResult run_sweep(const SweepSpec& spec, unsigned jobs = 1);

/// Preset ids: fig2, fig3, fig4, fig5, fig6.
SweepSpec preset(std::string_view id);
std::vector<std::string> preset_ids();

std::string_view to_string(SweptVariable v);
std::string_view to_string(SeriesVariable v);

}  // namespace cuqoe
