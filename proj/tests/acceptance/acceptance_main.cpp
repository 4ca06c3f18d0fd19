// Acceptance suite: one PASS/FAIL line per criterion, indented detail lines
// underneath. Exit status is nonzero when any criterion fails.
//
//   acceptance [--cli PATH] [--workdir DIR]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cuqoe/csv.hpp"
#include "cuqoe/engine.hpp"
#include "cuqoe/errors.hpp"
#include "cuqoe/kinematics.hpp"
#include "cuqoe/oracle.hpp"
#include "cuqoe/response.hpp"
#include "cuqoe/sweep.hpp"
#include "../support/random_cases.hpp"

namespace {

using namespace cuqoe;
using Clock = std::chrono::steady_clock;

const double kPi = std::acos(-1.0);
const double kSqrt12 = std::sqrt(12.0);

struct Verdict {
    bool pass = true;
    std::vector<std::string> details;

    void require(bool ok, const std::string& what) {
        pass = pass && ok;
        details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    }
    void note(const std::string& what) { details.push_back("     " + what); }
};

struct Options {
    std::string cli;
    std::filesystem::path workdir = std::filesystem::temp_directory_path();
};

std::string sci(double x, int digits = 3) {
    std::ostringstream s;
    s << std::scientific << std::setprecision(digits) << x;
    return s.str();
}

std::string fixed(double x, int digits = 4) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << x;
    return s.str();
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<double> log_space(double lo, double hi, int n) {
    std::vector<double> out;
    for (int i = 0; i < n; ++i) {
        out.push_back(std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (n - 1)));
    }
    out.front() = lo;
    out.back() = hi;
    return out;
}

// Rows of a multi-series sweep grouped by series value, in grid order.
std::map<double, std::vector<const SweepRow*>> by_series(const SweepResult& r) {
    std::map<double, std::vector<const SweepRow*>> out;
    for (const auto& row : r.rows) {
        out[row.series_value.value_or(0.0)].push_back(&row);
    }
    return out;
}

std::string csv_text(const SweepResult& r) {
    std::ostringstream s;
    write_csv(r, s);
    return s.str();
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Verdict oracle_equivalence() {
    Verdict v;
    const auto start = Clock::now();
    double worst = 0.0;
    std::string worst_at;
    int points = 0;
    int failures = 0;
    for (double e : {0.5, 1.0, 2.0}) {
        for (double sign : {1.0, -1.0}) {
            for (double ratio : log_space(0.1, 10.0, 9)) {
                // b / T = ratio with b T = 1
                const double t = 1.0 / std::sqrt(ratio);
                const double b = std::sqrt(ratio);
                const ResponseQuery q{sign * e, t, kSqrt12 / b};
                const double closed = response(q);
                double rel = 0.0;
                try {
                    const auto numeric = response_extrapolated(q, QuadratureSpec::for_query(q));
                    rel = std::abs(closed - numeric.value) / std::abs(closed);
                } catch (const NumericalError& ex) {
                    rel = INFINITY;
                    v.note(std::string("oracle failure: ") + ex.what());
                }
                ++points;
                if (!(rel <= 1e-3)) {
                    ++failures;
                }
                if (rel > worst) {
                    worst = rel;
                    worst_at = "E=" + fixed(sign * e, 2) + " b/T=" + fixed(ratio, 3);
                }
            }
        }
    }
    const double elapsed = seconds_since(start);
    v.require(failures == 0, std::to_string(points) + " points (3 gaps x 2 signs x 9 log-spaced b/T in [0.1, 10]), "
                                 "max relative deviation " + sci(worst) + " at " + worst_at + " (tol 1e-3)");
    v.require(elapsed <= 120.0, "runtime " + fixed(elapsed, 2) + " s single-threaded (limit 120 s)");
    return v;
}

Verdict detailed_balance() {
    Verdict v;
    testing::CaseGenerator gen(0xacce0002);
    double worst = 0.0;
    for (int n = 0; n < 1000; ++n) {
        const double e = gen.log_uniform(1e-3, 10.0);
        const double t = gen.log_uniform(1e-2, 50.0);
        const double a = gen.log_uniform(1e-2, 1e3);
        const double f_minus = response(-e, t, a);
        const double f_plus = response(e, t, a);
        const double scale = std::max({std::abs(f_minus), std::abs(f_plus), e * t / 8.0});
        worst = std::max(worst, std::abs((f_minus - f_plus) - e * t / 8.0) / scale);
    }
    v.require(worst <= 1e-12, "1000 random (E, T, a): max |F(-E) - F(E) - ET/8| / max(|F(-E)|, ET/8) = " +
                                  sci(worst) + " (tol 1e-12)");
    return v;
}

Verdict degenerate_pole() {
    Verdict v;
    double worst_rel = 0.0;
    double worst_abs = 0.0;
    for (double e : {0.0, 0.5, 1.0, 2.0}) {
        for (double t : {0.5, 1.0, 2.0}) {
            const double b = t + 1e-5 * t;
            const double generic = response_positive(e, t, kSqrt12 / b);
            const double merged = response_double_pole(e, b);
            worst_abs = std::max(worst_abs, std::abs(generic - merged));
            worst_rel = std::max(worst_rel, std::abs(generic - merged) / merged);
        }
    }
    v.require(worst_rel <= 1e-6, "|b - T| = 1e-5 T, E in {0, 0.5, 1, 2}, T in {0.5, 1, 2}: max relative gap "
                                 "between generic and double-pole branch " + sci(worst_rel) + " (tol 1e-6)");
    v.note("absolute gap " + sci(worst_abs) + "; the generic branch differs from the merged value at first order "
           "in (b - T)/T, e.g. d ln F / d b = -1/(2T) at E = 0, so a 1e-5 offset gives 5e-6");

    double worst_zero = 0.0;
    for (double t : {0.5, 1.0, 2.0}) {
        const double b = t;
        const double generic_limit = (b * b + b * t + t * t) / (16.0 * b * (b + t));
        worst_zero = std::max({worst_zero, std::abs(response(0.0, t, kSqrt12 / t) - 3.0 / 32.0),
                               std::abs(response_double_pole(0.0, t) - 3.0 / 32.0),
                               std::abs(generic_limit - 3.0 / 32.0)});
    }
    v.require(worst_zero <= 1e-12 * 3.0 / 32.0,
              "E = 0, b = T: response, double-pole branch and generic zero-gap limit all equal 3/32, max deviation " +
                  sci(worst_zero));
    return v;
}

Verdict lorentzian_reduction() {
    Verdict v;
    const auto start = Clock::now();
    const std::vector<std::pair<std::string, std::function<double(double)>>> kernels = {
        {"exp(-m^2)", [](double m) { return std::exp(-m * m); }},
        {"1/(m^2+1)", [](double m) { return 1.0 / (m * m + 1.0); }},
        {"sech(m)", [](double m) { return 1.0 / std::cosh(m); }},
    };
    double worst = 0.0;
    std::string worst_at;
    for (const auto& [name, kernel] : kernels) {
        for (double t : {0.5, 1.0, 2.0}) {
            const auto r = lorentzian_reduction_check(kernel, t);
            const double rel = std::abs(r.double_integral - r.single_integral) / std::abs(r.single_integral);
            if (rel >= worst) {
                worst = rel;
                worst_at = name + " T=" + fixed(t, 1);
            }
        }
    }
    const double elapsed = seconds_since(start);
    v.require(worst <= 1e-6, "3 kernels x T in {0.5, 1, 2}: max relative gap " + sci(worst) + " at " + worst_at +
                                 " (tol 1e-6)");
    v.require(elapsed <= 30.0, "runtime " + fixed(elapsed, 2) + " s (limit 30 s)");
    return v;
}

Verdict conservation_and_cyclicity() {
    Verdict v;
    testing::CaseGenerator gen(0xacce0005);
    double worst_energy = 0.0;
    double worst_cycle = 0.0;
    for (int n = 0; n < 200; ++n) {
        const double speed = gen.uniform(0.5, 0.9999);
        const double a_cold = gen.log_uniform(0.5, 50.0);
        const double a_hot = a_cold * gen.log_uniform(1.01, 30.0);
        const double e1 = gen.log_uniform(0.05, 5.0);
        const double e2 = e1 * gen.log_uniform(1.01, 10.0);
        const auto c = CycleConfig::from_accelerations(speed, a_hot, a_cold, e1, e2, gen.uniform(0.0, 1.0));

        const auto l = stroke_ledger(c, *c.population());
        const double energy_scale = std::max({std::abs(l.w1), std::abs(l.w3), std::abs(l.q2), std::abs(l.q4)});
        worst_energy = std::max(worst_energy, std::abs(l.w_total + l.q_total) / energy_scale);

        const double pc = p_cyc(c);
        const double hot = transition_probability(pc, c.hot());
        const double cold = transition_probability(pc, c.cold());
        worst_cycle = std::max(worst_cycle, std::abs(hot + cold) / std::max(std::abs(hot), std::abs(cold)));
    }
    v.require(worst_energy <= 1e-12, "200 random configs: max |W_total + Q_total| / max stroke " + sci(worst_energy) +
                                         " (tol 1e-12)");
    v.require(worst_cycle <= 1e-12, "200 random configs: max |dp_H + dp_C| / max |dp| at p_cyc " + sci(worst_cycle) +
                                        " (tol 1e-12)");
    return v;
}

Verdict coupled_asymptote(const SweepResult& fig2) {
    Verdict v;
    const double speed = 0.999;
    const double gamma = lorentz_gamma(speed);
    const double target = kPi * gamma * speed / (16.0 * kSqrt12);
    const double r = kPi * gamma * speed / kSqrt12;
    const double exact_limit = (1.0 + r + r * r) / (16.0 * (1.0 + r));

    const auto series = by_series(fig2);
    const auto& p0 = series.at(0.0);
    const double last = p0.back()->values[0];
    const double last_a = p0.back()->swept_value;
    // smallest a beyond which every grid point stays within 1%
    std::size_t from = p0.size();
    while (from > 0 && std::abs(p0[from - 1]->values[0] - target) <= 0.01 * target) {
        --from;
    }
    v.require(std::abs(last - target) <= 0.01 * target,
              "p = 0: dp_H(a = " + fixed(last_a, 0) + ") = " + fixed(last, 5) + " vs pi gamma v / (16 sqrt 12) = " +
                  fixed(target, 5) + ", relative gap " + sci(std::abs(last - target) / target) + " (tol 1e-2)");
    if (from < p0.size()) {
        v.note("within 1% for all grid points a >= " + fixed(p0[from]->swept_value, 1));
    }
    v.note("exact a -> infinity limit (1 + r + r^2) / (16 (1 + r)), r = T/b: " + fixed(exact_limit, 5));

    const ResponseQuery q{1.0, kPi * gamma * speed / last_a, last_a};
    const auto numeric = response_extrapolated(q, QuadratureSpec::for_query(q));
    const double oracle_gap = std::abs(numeric.value - response(q)) / response(q);
    v.require(oracle_gap <= 1e-3, "oracle at a = " + fixed(last_a, 0) + ": " + fixed(numeric.value, 6) +
                                      ", relative gap to closed form " + sci(oracle_gap));

    const auto& half = series.at(0.5);
    bool negative = true;
    bool rising = true;
    for (std::size_t i = 0; i < half.size(); ++i) {
        negative = negative && half[i]->values[0] < 0.0;
        if (i > 0) {
            rising = rising && half[i]->values[0] > half[i - 1]->values[0];
        }
    }
    v.require(negative && rising, "p = 1/2: dp_H < 0 and strictly increasing toward 0, from " +
                                      sci(half.front()->values[0]) + " to " + sci(half.back()->values[0]));
    return v;
}

Verdict figure_structure(const std::map<std::string, SweepResult>& figs, double elapsed) {
    Verdict v;

    {
        const auto s = by_series(figs.at("fig2"));
        const bool all_negative = std::all_of(s.at(0.75).begin(), s.at(0.75).end(),
                                              [](const SweepRow* r) { return r->values[0] < 0.0; });
        v.require(all_negative, "fig2: dp_H < 0 for p = 0.75 across the grid");
        const auto& p0 = s.at(0.0);
        const bool high_positive = std::all_of(p0.begin() + static_cast<long>(p0.size() / 2), p0.end(),
                                               [](const SweepRow* r) { return r->values[0] > 0.0; });
        v.require(high_positive, "fig2: dp_H > 0 for p = 0 on the upper half of the a_H grid (a_H >= " +
                                     fixed(p0[p0.size() / 2]->swept_value, 1) + ")");
    }
    {
        const auto s = by_series(figs.at("fig3"));
        for (double p : {0.0, 0.25}) {
            const auto& rows = s.at(p);
            bool decreasing = true;
            for (std::size_t i = 1; i < rows.size(); ++i) {
                decreasing = decreasing && rows[i]->values[0] < rows[i - 1]->values[0];
            }
            v.require(decreasing, "fig3: p = " + fixed(p, 2) + " dp_H strictly decreasing in R_hot, " +
                                      fixed(rows.front()->values[0], 4) + " -> " + fixed(rows.back()->values[0], 4));
        }
    }
    {
        const auto s = by_series(figs.at("fig4"));
        bool in_range = true;
        bool monotone = true;
        for (const auto& [speed, rows] : s) {
            for (std::size_t i = 0; i < rows.size(); ++i) {
                in_range = in_range && rows[i]->values[0] > 0.0 && rows[i]->values[0] < 0.5;
                if (i > 0) {
                    monotone = monotone && rows[i]->values[0] >= rows[i - 1]->values[0] - 1e-9;
                }
            }
        }
        v.require(in_range, "fig4: p_cyc in (0, 1/2) everywhere");
        v.require(monotone, "fig4: p_cyc nondecreasing in a_H (tol 1e-9 per step)");
        bool ordered = true;
        for (auto it = s.begin(); std::next(it) != s.end(); ++it) {
            const auto& slow = it->second;
            const auto& fast = std::next(it)->second;
            for (std::size_t i = 0; i < slow.size(); ++i) {
                ordered = ordered && fast[i]->values[0] < slow[i]->values[0];
            }
        }
        v.require(ordered, "fig4: p_cyc pointwise smaller for larger v");
    }
    {
        const auto s = by_series(figs.at("fig5"));
        bool monotone = true;
        bool saturating = true;
        for (const auto& [speed, rows] : s) {
            double largest_step = 0.0;
            for (std::size_t i = 1; i < rows.size(); ++i) {
                const double step = rows[i]->values[0] - rows[i - 1]->values[0];
                monotone = monotone && step >= -1e-9;
                largest_step = std::max(largest_step, step);
            }
            const double final_step = rows.back()->values[0] - rows[rows.size() - 2]->values[0];
            saturating = saturating && final_step <= 0.1 * largest_step;
            v.note("fig5 v = " + fixed(speed, 3) + ": W_ext " + sci(rows.front()->values[0]) + " -> " +
                   sci(rows.back()->values[0]) + ", final step / largest step " + sci(final_step / largest_step));
        }
        v.require(monotone, "fig5: W_ext nondecreasing in a_H (tol 1e-9 per step)");
        v.require(saturating, "fig5: W_ext saturates (final log-grid step below 10% of the largest step)");

        int violations = 0;
        double below = 0.0;
        double lowest_ok = INFINITY;
        for (auto it = s.begin(); std::next(it) != s.end(); ++it) {
            const auto& slow = it->second;
            const auto& fast = std::next(it)->second;
            for (std::size_t i = 0; i < slow.size(); ++i) {
                if (!(fast[i]->values[0] > slow[i]->values[0])) {
                    ++violations;
                    below = std::max(below, slow[i]->swept_value);
                } else {
                    lowest_ok = std::min(lowest_ok, slow[i]->swept_value);
                }
            }
        }
        v.require(violations == 0, "fig5: W_ext pointwise larger for larger v (" + std::to_string(violations) +
                                       " violating grid points)");
        if (violations > 0) {
            v.note("violations at a_H <= " + fixed(below, 2) + "; ordering holds for a_H >= " +
                   fixed(lowest_ok, 2) + ". Every curve crosses W_ext = 0 at a_H = a_C E2 / E1 = 30, where hot and "
                   "cold contacts see the same E T; below it all W_ext < 0 and faster curves are more negative");
        }
    }
    {
        const auto s = by_series(figs.at("fig6"));
        for (const auto& [a_hot, rows] : s) {
            const auto best = std::max_element(rows.begin(), rows.end(), [](const SweepRow* a, const SweepRow* b) {
                return a->values[0] < b->values[0];
            });
            const auto idx = static_cast<std::size_t>(best - rows.begin());
            const bool interior = idx > 0 && idx + 1 < rows.size() &&
                                  (*best)->values[0] > rows.front()->values[0] &&
                                  (*best)->values[0] > rows.back()->values[0];
            v.require(interior, "fig6 a_H = " + fixed(a_hot, 0) + ": interior maximum W_ext = " +
                                    sci((*best)->values[0]) + " at delta_E = " + fixed((*best)->swept_value, 3));
        }
    }
    double worst_oracle = 0.0;
    std::size_t checked = 0;
    for (const auto& [id, result] : figs) {
        for (const auto& row : result.rows) {
            if (row.oracle_deviation) {
                ++checked;
                worst_oracle = std::max(worst_oracle, *row.oracle_deviation);
            }
        }
    }
    v.require(checked > 0 && worst_oracle <= 1e-3, "oracle check on every 10th preset point: " +
                                                       std::to_string(checked) + " rows, max relative deviation " +
                                                       sci(worst_oracle) + " (tol 1e-3)");
    v.require(elapsed <= 300.0, "full preset suite runtime " + fixed(elapsed, 2) + " s (limit 300 s)");
    return v;
}

Verdict efficiency_grid() {
    Verdict v;
    const double reference = efficiency(CycleConfig::from_accelerations(0.9, 50.0, 15.0, 1.0, 2.0));
    int identical = 0;
    const auto speeds = log_space(0.5, 0.9999, 10);
    for (double speed : speeds) {
        for (double a_hot : log_space(16.0, 500.0, 10)) {
            const double eta = efficiency(CycleConfig::from_accelerations(speed, a_hot, 15.0, 1.0, 2.0));
            if (std::memcmp(&eta, &reference, sizeof eta) == 0) {
                ++identical;
            }
        }
    }
    v.require(identical == 100, std::to_string(identical) + "/100 (v, a_H) grid points bit-identical");
    v.require(reference == 0.5, "E1 = 1, E2 = 2 gives " + fixed(reference, 17));
    return v;
}

Verdict determinism(const Options& opt) {
    Verdict v;
    const auto spec = preset("fig2");
    const std::string one = csv_text(run_sweep(spec, 1));
    const std::string four = csv_text(run_sweep(spec, 4));
    v.require(one == four, "in-process fig2 sweep, jobs 1 vs 4: " + std::string(one == four ? "identical" : "differ") +
                               " (" + std::to_string(one.size()) + " bytes)");
    if (opt.cli.empty()) {
        v.note("CLI check skipped: no --cli given");
        return v;
    }
    const auto a = opt.workdir / "acceptance_fig2_jobs1.csv";
    const auto b = opt.workdir / "acceptance_fig2_jobs3.csv";
    std::filesystem::remove(a);
    std::filesystem::remove(b);
    const int rc_a = std::system(("\"" + opt.cli + "\" sweep --preset fig2 --jobs 1 --out \"" + a.string() + "\"").c_str());
    const int rc_b = std::system(("\"" + opt.cli + "\" sweep --preset fig2 --jobs 3 --out \"" + b.string() + "\"").c_str());
    const bool same = rc_a == 0 && rc_b == 0 && slurp(a) == slurp(b);
    v.require(same, "cuqoe sweep --preset fig2, --jobs 1 vs --jobs 3: byte-identical CSV files");
    v.require(slurp(a) == one, "CLI output equals the in-process CSV");
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--cli" && i + 1 < argc) {
            opt.cli = argv[++i];
        } else if (arg == "--workdir" && i + 1 < argc) {
            opt.workdir = argv[++i];
        } else {
            std::cerr << "usage: acceptance [--cli PATH] [--workdir DIR]\n";
            return 2;
        }
    }

    const auto preset_start = Clock::now();
    std::map<std::string, SweepResult> figs;
    for (const auto& id : preset_ids()) {
        auto spec = preset(id);
        spec.oracle_check = true;
        figs.emplace(id, run_sweep(spec, 1));
    }
    const double preset_seconds = seconds_since(preset_start);

    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
        {"1 oracle equivalence", oracle_equivalence},
        {"2 detailed balance", detailed_balance},
        {"3 degenerate pole", degenerate_pole},
        {"4 lorentzian reduction", lorentzian_reduction},
        {"5 energy conservation and cyclicity", conservation_and_cyclicity},
        {"6 coupled asymptote", [&] { return coupled_asymptote(figs.at("fig2")); }},
        {"7 figure preset structure", [&] { return figure_structure(figs, preset_seconds); }},
        {"8 efficiency", efficiency_grid},
        {"9 determinism", [&] { return determinism(opt); }},
    };

    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Verdict v;
        try {
            v = run();
        } catch (const std::exception& e) {
            v.require(false, std::string("exception: ") + e.what());
        }
        std::cout << (v.pass ? "PASS " : "FAIL ") << name << '\n';
        for (const auto& line : v.details) {
            std::cout << "    " << line << '\n';
        }
        failed += v.pass ? 0 : 1;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << '/' << criteria.size()
              << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
