// cuqoe: circular-Unruh quantum Otto engine command line.
//
//   cuqoe response --energy E --duration T --accel a [--oracle]
//   cuqoe cycle (--config FILE | --v V --a-hot A|--r-hot R --a-cold A|--r-cold R --e1 E --e2 E [--p P|cyc])
//   cuqoe sweep (--preset fig2..fig6 | --config FILE) [--out PATH] [--oracle-check] [--jobs N]
//               [--decoupled-T --duration-hot T]
//
// Exit codes: 0 success, 1 configuration error, 2 numerical failure.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "cuqoe/config_file.hpp"
#include "cuqoe/csv.hpp"
#include "cuqoe/engine.hpp"
#include "cuqoe/errors.hpp"
#include "cuqoe/oracle.hpp"
#include "cuqoe/response.hpp"
#include "cuqoe/sweep.hpp"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitNumerical = 2;

void print_kv(const char* key, double value) { std::cout << key << " = " << cuqoe::format_number(value) << '\n'; }

struct ResponseArgs {
    double energy = 0.0;
    double duration = 0.0;
    double accel = 0.0;
    bool oracle = false;
};

int run_response(const ResponseArgs& args) {
    const cuqoe::ResponseQuery q{args.energy, args.duration, args.accel};
    const double closed = cuqoe::response(q);
    print_kv("F", closed);
    if (args.oracle) {
        const auto numeric = cuqoe::response_extrapolated(q, cuqoe::QuadratureSpec::for_query(q));
        print_kv("F_oracle", numeric.value);
        print_kv("F_oracle_error", numeric.error);
        print_kv("F_oracle_imag", numeric.imag);
        const double rel = std::abs(closed - numeric.value) / std::max(std::abs(closed), 1e-300);
        print_kv("relative_deviation", rel);
        if (std::abs(closed - numeric.value) > std::max(1e-3 * std::abs(closed), 1e-6)) {
            throw cuqoe::OracleMismatchError("closed form and quadrature disagree beyond 1e-3");
        }
    }
    return 0;
}

struct CycleArgs {
    std::string config;
    std::optional<double> v, a_hot, r_hot, a_cold, r_cold, e1, e2;
    std::string p = "cyc";
};

int run_cycle(const CycleArgs& args) {
    cuqoe::KeyValues kv;
    if (!args.config.empty()) {
        kv = cuqoe::read_key_values(args.config);
    } else {
        const auto put = [&kv](const char* key, const std::optional<double>& value) {
            if (value) {
                kv[key] = cuqoe::format_number(*value);
            }
        };
        put("v", args.v);
        put("a_H", args.a_hot);
        put("R_hot", args.r_hot);
        put("a_C", args.a_cold);
        put("R_cold", args.r_cold);
        put("E1", args.e1);
        put("E2", args.e2);
        kv["p"] = args.p;
    }
    const cuqoe::CycleConfig config = cuqoe::cycle_config_from(kv);
    const auto hot = config.hot();
    const auto cold = config.cold();
    const double pcyc = cuqoe::p_cyc(config);
    const double p = cuqoe::operating_population(config);
    const auto ledger = cuqoe::stroke_ledger(config, p);

    print_kv("gamma", config.hot_motion().gamma());
    print_kv("a_H", hot.acceleration);
    print_kv("a_C", cold.acceleration);
    print_kv("R_hot", config.hot_motion().radius());
    print_kv("R_cold", config.cold_motion().radius());
    print_kv("T_H", hot.duration);
    print_kv("T_C", cold.duration);
    print_kv("p", p);
    print_kv("p_cyc", pcyc);
    print_kv("delta_p_H", ledger.delta_p_hot);
    print_kv("delta_p_C", cuqoe::transition_probability(p, cold));
    print_kv("Q1", ledger.q1);
    print_kv("Q2", ledger.q2);
    print_kv("Q3", ledger.q3);
    print_kv("Q4", ledger.q4);
    print_kv("W1", ledger.w1);
    print_kv("W2", ledger.w2);
    print_kv("W3", ledger.w3);
    print_kv("W4", ledger.w4);
    print_kv("W_total", ledger.w_total);
    print_kv("Q_total", ledger.q_total);
    print_kv("W_ext", -ledger.w_total);
    print_kv("efficiency", cuqoe::efficiency(config));
    return 0;
}

struct SweepArgs {
    std::string preset;
    std::string config;
    std::string out;
    bool oracle_check = false;
    unsigned jobs = 1;
    bool decoupled = false;
    std::optional<double> duration_hot;
};

int run_sweep_command(const SweepArgs& args) {
    cuqoe::SweepSpec spec =
        args.preset.empty() ? cuqoe::sweep_spec_from(cuqoe::read_key_values(args.config)) : cuqoe::preset(args.preset);
    if (args.oracle_check) {
        spec.oracle_check = true;
    }
    if (args.decoupled) {
        spec.decoupled_duration = true;
    }
    if (args.duration_hot) {
        spec.duration_hot = args.duration_hot;
    }
    const auto result = cuqoe::run_sweep(spec, args.jobs);
    if (args.out.empty()) {
        if (result.rows.empty()) {
            throw cuqoe::ConfigError("sweep produced no rows");
        }
        cuqoe::write_csv(result, std::cout);
    } else {
        cuqoe::emit_csv(result, args.out);
    }
    if (spec.oracle_check) {
        std::size_t checked = 0;
        double worst = 0.0;
        for (const auto& row : result.rows) {
            if (row.oracle_deviation) {
                ++checked;
                worst = std::max(worst, *row.oracle_deviation);
            }
        }
        std::cerr << "oracle check: " << checked << " points, max relative deviation " << cuqoe::format_number(worst)
                  << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Circular-Unruh quantum Otto engine: response functions, cycle ledger, parameter sweeps"};
    app.require_subcommand(1);

    ResponseArgs response_args;
    auto* response_cmd = app.add_subcommand("response", "Evaluate the detector response F(E, T) at acceleration a");
    response_cmd->add_option("--energy", response_args.energy, "Signed energy gap E")->required();
    response_cmd->add_option("--duration", response_args.duration, "Interaction timescale T")->required();
    response_cmd->add_option("--accel", response_args.accel, "Centripetal acceleration a")->required();
    response_cmd->add_flag("--oracle", response_args.oracle, "Cross-check against the quadrature oracle");

    CycleArgs cycle_args;
    auto* cycle_cmd = app.add_subcommand("cycle", "Full Otto-cycle ledger for one configuration");
    auto* cycle_config = cycle_cmd->add_option("--config", cycle_args.config, "key = value configuration file");
    const auto cycle_flag = [&](const char* name, std::optional<double>& target, const char* help) {
        cycle_cmd->add_option(name, target, help)->excludes(cycle_config);
    };
    cycle_flag("--v", cycle_args.v, "Speed (0 < v < 1)");
    cycle_flag("--a-hot", cycle_args.a_hot, "Hot-circle acceleration a_H");
    cycle_flag("--r-hot", cycle_args.r_hot, "Hot-circle radius R_hot");
    cycle_flag("--a-cold", cycle_args.a_cold, "Cold-circle acceleration a_C");
    cycle_flag("--r-cold", cycle_args.r_cold, "Cold-circle radius R_cold");
    cycle_flag("--e1", cycle_args.e1, "Lower gap E1");
    cycle_flag("--e2", cycle_args.e2, "Upper gap E2");
    cycle_cmd->add_option("--p", cycle_args.p, "Initial excited population, or 'cyc'")->excludes(cycle_config);

    SweepArgs sweep_args;
    auto* sweep_cmd = app.add_subcommand("sweep", "Parameter sweep to CSV");
    auto* preset_opt = sweep_cmd->add_option("--preset", sweep_args.preset, "fig2 | fig3 | fig4 | fig5 | fig6");
    auto* config_opt = sweep_cmd->add_option("--config", sweep_args.config, "key = value sweep file");
    preset_opt->excludes(config_opt);
    sweep_cmd->add_option("--out", sweep_args.out, "CSV destination (stdout when omitted)");
    sweep_cmd->add_flag("--oracle-check", sweep_args.oracle_check, "Verify every 10th point against quadrature");
    sweep_cmd->add_option("--jobs", sweep_args.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
    sweep_cmd->add_flag("--decoupled-T", sweep_args.decoupled, "Hold the hot duration fixed (exploration only)");
    sweep_cmd->add_option("--duration-hot", sweep_args.duration_hot, "Hot duration for --decoupled-T");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (*response_cmd) {
            return run_response(response_args);
        }
        if (*cycle_cmd) {
            return run_cycle(cycle_args);
        }
        if (sweep_args.preset.empty() && sweep_args.config.empty()) {
            std::cerr << "sweep: one of --preset or --config is required\n";
            return kExitConfig;
        }
        return run_sweep_command(sweep_args);
    } catch (const cuqoe::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const cuqoe::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const cuqoe::DomainError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
}
