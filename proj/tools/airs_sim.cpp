// SPDX-License-Identifier: Apache-2.0
//
// airs_sim — secrecy-rate simulator for a UAV-carried reflecting surface
// collecting data from a ground sensor field.
//
// Subcommands:
//   run         one seeded flight, per-sample rates CSV + manifest
//   sweep       parameter sweep (T, P, dist_BE, K, r) with Monte-Carlo averaging
//   trajectory  planner output only (Fig.-2 style data)
//   validate    run the invariant suite against the parsed config

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "airs/config.hpp"
#include "airs/errors.hpp"
#include "airs/rng.hpp"
#include "airs/sim.hpp"

namespace fs = std::filesystem;
using namespace airs;

namespace {

struct CommonArgs {
    std::string config_path;
    std::string out_dir = ".";
    std::string scheme;
    std::vector<std::string> overrides;
    std::int64_t seed = -1;
    int trials = -1;
    bool emit_plot = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "key=value config file (defaults: Table I)");
    cmd->add_option("--seed", args.seed, "master seed override");
    cmd->add_option("--trials", args.trials, "Monte-Carlo trial count override");
    cmd->add_option("--scheme", args.scheme, "beamforming scheme: 1, 2 or fixed");
    cmd->add_option("--out", args.out_dir, "output directory (default: cwd)");
    cmd->add_option("--set", args.overrides, "extra key=value overrides")->expected(-1);
    cmd->add_flag("--emit-plot", args.emit_plot, "also write a matplotlib plot script");
}

ParsedConfig resolve_config(const CommonArgs& args) {
    ScenarioConfig cfg;
    if (!args.config_path.empty()) {
        cfg = parse_config_file(args.config_path).config;
    }
    for (const std::string& kv : args.overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("--set expects key=value, got '" + kv + "'");
        }
        apply_config_key(cfg, kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (!args.scheme.empty()) {
        cfg.scheme = scheme_from_string(args.scheme);
    }
    if (args.seed >= 0) {
        cfg.seed = static_cast<std::uint64_t>(args.seed);
    }
    if (args.trials > 0) {
        cfg.trials = args.trials;
    }
    ParsedConfig parsed = finalize_config(cfg);
    for (const std::string& w : parsed.warnings) {
        std::cerr << "warning: " << w << "\n";
    }
    return parsed;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << content;
}

std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

void emit_manifest(const ScenarioConfig& cfg, const std::string& command,
                   const fs::path& out_dir) {
    write_file(out_dir / "manifest.txt",
               manifest_text(cfg, command, out_dir.string(), iso_timestamp()));
}

void emit_plot_script(const fs::path& out_dir) {
    static const char* script = R"(#!/usr/bin/env python3
"""Plot airs_sim CSV outputs found in this directory."""
import os
import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import csv


def read_csv(name):
    if not os.path.exists(name):
        return None
    with open(name) as f:
        rows = list(csv.DictReader(f))
    return rows


rates = read_csv("rates.csv")
if rates:
    n = [int(r["n"]) for r in rates]
    plt.figure(figsize=(8, 4))
    plt.plot(n, [float(r["rate_clamped"]) for r in rates], label="secrecy rate")
    plt.plot(n, [float(r["rate_raw"]) for r in rates], alpha=0.4, label="raw")
    plt.xlabel("sample n")
    plt.ylabel("bits")
    plt.legend()
    plt.tight_layout()
    plt.savefig("rates.png", dpi=120)

traj = read_csv("trajectory.csv")
if traj:
    plt.figure(figsize=(5, 5))
    plt.plot([float(r["x"]) for r in traj], [float(r["y"]) for r in traj], "-")
    plt.scatter([float(traj[0]["x"])], [float(traj[0]["y"])], marker="^", label="start")
    plt.scatter([float(traj[-1]["x"])], [float(traj[-1]["y"])], marker="*", label="end")
    plt.xlabel("x [m]")
    plt.ylabel("y [m]")
    plt.axis("equal")
    plt.legend()
    plt.tight_layout()
    plt.savefig("trajectory.png", dpi=120)

sweep = read_csv("sweep.csv")
if sweep:
    x = [float(r["param_value"]) for r in sweep]
    mean = [float(r["mean"]) for r in sweep]
    lo = [float(r["ci_low"]) for r in sweep]
    hi = [float(r["ci_high"]) for r in sweep]
    plt.figure(figsize=(6, 4))
    plt.plot(x, mean, "o-")
    plt.fill_between(x, lo, hi, alpha=0.25)
    plt.xlabel("parameter value")
    plt.ylabel("mean secrecy [bits]")
    plt.tight_layout()
    plt.savefig("sweep.png", dpi=120)

print("plots written")
)";
    write_file(out_dir / "plot.py", script);
}

int cmd_run(const CommonArgs& args) {
    const ScenarioConfig cfg = resolve_config(args).config;
    const fs::path out_dir(args.out_dir);
    fs::create_directories(out_dir);

    const TrialResult trial = run_scenario(cfg, derive_seed(cfg.seed, 0));
    write_file(out_dir / "rates.csv", rates_csv(trial));
    emit_manifest(cfg, "run", out_dir);
    if (args.emit_plot) {
        emit_plot_script(out_dir);
    }
    std::printf("run: N=%d scheme=%s avg_raw=%.6f avg_clamped=%.6f\n", cfg.n_samples(),
                scheme_to_string(cfg.scheme).c_str(), trial.avg_raw, trial.avg_clamped);
    return 0;
}

int cmd_sweep(const CommonArgs& args, const std::string& param,
              const std::vector<double>& values) {
    const ScenarioConfig cfg = resolve_config(args).config;
    const fs::path out_dir(args.out_dir);
    fs::create_directories(out_dir);

    const SweepParam p = sweep_param_from_string(param);
    const std::vector<SweepRow> rows = sweep(cfg, p, values, cfg.trials);
    write_file(out_dir / "sweep.csv", sweep_csv(rows));
    emit_manifest(cfg, "sweep --param " + param, out_dir);
    if (args.emit_plot) {
        emit_plot_script(out_dir);
    }
    for (const SweepRow& row : rows) {
        std::printf("%s=%g mean=%.6f ci=[%.6f, %.6f] trials=%d\n", param.c_str(),
                    row.param_value, row.aggregate.mean_clamped, row.aggregate.ci_low,
                    row.aggregate.ci_high, row.aggregate.trials);
    }
    return 0;
}

int cmd_trajectory(const CommonArgs& args) {
    const ScenarioConfig cfg = resolve_config(args).config;
    const fs::path out_dir(args.out_dir);
    fs::create_directories(out_dir);

    const SensorField field = place_sensors(cfg.omega_a, cfg.field_radius, cfg.m_sensors,
                                            derive_seed(derive_seed(cfg.seed, 0), 1));
    PlannedTrajectory traj;
    if (cfg.scheme == Scheme::FixedIrs) {
        traj.start = {cfg.omega_fix_irs.x, cfg.omega_fix_irs.y, cfg.altitude};
        traj.points.assign(static_cast<std::size_t>(cfg.n_samples()), traj.start);
        traj.steps.assign(traj.points.size(), StepInfo{});
    } else {
        traj = plan_trajectory(cfg.flight_plan(), cfg.omega_a, cfg.omega_b,
                               make_planner_objective(cfg, field));
    }
    write_file(out_dir / "trajectory.csv", trajectory_csv(traj));
    emit_manifest(cfg, "trajectory", out_dir);
    if (args.emit_plot) {
        emit_plot_script(out_dir);
    }
    const Vec3& last = traj.points.back();
    std::printf("trajectory: N=%zu terminal=(%.2f, %.2f, %.2f)\n", traj.points.size(), last.x,
                last.y, last.z);
    return 0;
}

// --- validate: fast end-to-end invariant checks on the parsed scenario ---

struct Validator {
    int failures = 0;

    void check(const std::string& name, bool ok, const std::string& detail = "") {
        std::printf("[%s] %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
                    detail.empty() ? "" : " — ", detail.c_str());
        if (!ok) {
            ++failures;
        }
    }
};

int cmd_validate(const CommonArgs& args) {
    const ScenarioConfig cfg = resolve_config(args).config;
    Validator v;
    const IrsGrid grid = cfg.grid();
    char detail[160];

    // co-phasing equality at r = 0
    {
        ScenarioConfig c0 = cfg;
        c0.field_radius = 0.0;
        const SensorField field = place_sensors(c0.omega_a, 0.0, c0.m_sensors, 11);
        FadingDraw fading;
        fading.rho0 = c0.rho0;
        const Vec3 q = c0.flight_plan().start;
        const SensorIrsChannel sensed = build_sensor_irs(field, q, grid, fading);
        const IrsGroundChannel hb = build_irs_ground(q, c0.omega_b, grid, c0.rho0, 1.0);
        const Eigen::VectorXd u_g = rank1_phase_vector(sensed.phi_g);
        const ReflectionState refl =
            reflection_phases(irs_response_phases(grid, unit_vector(c0.omega_b, q)), u_g, 0.0);
        const Eigen::RowVectorXcd row = effective_row(hb.h, refl.theta, sensed.g);
        double worst = 0.0;
        for (int m = 0; m < field.count(); ++m) {
            const double expect = grid.size() * std::sqrt(hb.gain * sensed.gain_cmr[m]);
            worst = std::max(worst, std::abs(std::abs(row[m]) - expect) / expect);
        }
        std::snprintf(detail, sizeof(detail), "max rel err %.2e", worst);
        v.check("co-phasing equality (r=0)", worst < 1e-9, detail);
    }

    // bound dominance + |zeta| <= K on random geometries
    {
        Rng rng(2024);
        double worst_excess = 0.0;
        double worst_zeta = 0.0;
        bool ok = true;
        for (int i = 0; i < 200; ++i) {
            ScenarioConfig c = cfg;
            c.field_radius = rng.uniform(0.0, 10.0);
            const SensorField field =
                place_sensors(c.omega_a, c.field_radius, c.m_sensors, rng.next_u64());
            const Vec3 q{rng.uniform(-150.0, 150.0), rng.uniform(-150.0, 150.0), c.altitude};
            FadingDraw fading;
            fading.rho0 = c.rho0;
            fading.varsigma_g = rng.exponential();
            fading.varsigma_b = rng.exponential();
            fading.varsigma_e = rng.exponential();
            const SampleEvaluation ev =
                evaluate_sample(q, field, grid, c, fading, Scheme::Two, true);
            const double slack_b =
                ev.snr.gamma_b - (ev.bounds.gamma_b_ub + 1e-9 * (1.0 + ev.bounds.gamma_b_ub));
            const double slack_e =
                ev.snr.gamma_e - (ev.bounds.gamma_e_ub + 1e-9 * (1.0 + ev.bounds.gamma_e_ub));
            worst_excess = std::max({worst_excess, slack_b, slack_e});
            worst_zeta = std::max(worst_zeta, std::abs(ev.bounds.zeta));
            ok = ok && slack_b <= 0.0 && slack_e <= 0.0 &&
                 std::abs(ev.bounds.zeta) <= grid.size() + 1e-9;
        }
        std::snprintf(detail, sizeof(detail), "max |zeta| %.3f (K=%d)", worst_zeta,
                      grid.size());
        v.check("SNR bounds dominate pathwise; |zeta| <= K", ok, detail);
    }

    // cubic roots satisfy the polynomial and Vieta's relations
    {
        Rng rng(7);
        bool ok = true;
        double worst = 0.0;
        for (int i = 0; i < 2000; ++i) {
            CubicCoeffs c;
            c.b = rng.uniform(-10.0, 10.0);
            c.c = rng.uniform(-10.0, 10.0);
            c.d = rng.uniform(-10.0, 10.0);
            const std::vector<double> roots = solve_epsilon(c);
            ok = ok && !roots.empty();
            for (double eps : roots) {
                const double res =
                    std::abs(((eps - c.b) * eps + c.c) * eps + c.d);
                worst = std::max(worst, res);
                ok = ok && res < 1e-9;
            }
        }
        std::snprintf(detail, sizeof(detail), "max residual %.2e", worst);
        v.check("cubic solver residuals", ok, detail);
    }

    // planner respects the speed cap and altitude
    {
        ScenarioConfig c = cfg;
        c.total_time = 30.0; // short flight is enough for the constraint check
        const SensorField field = place_sensors(c.omega_a, c.field_radius, c.m_sensors, 5);
        const PlannedTrajectory traj = plan_trajectory(
            c.flight_plan(), c.omega_a, c.omega_b, make_planner_objective(c, field));
        bool ok = true;
        Vec3 prev = traj.start;
        for (const Vec3& p : traj.points) {
            ok = ok && distance(prev, p) <= c.flight_plan().step_budget() + 1e-9 &&
                 std::abs(p.z - c.altitude) == 0.0;
            prev = p;
        }
        v.check("trajectory speed/altitude constraints", ok);
    }

    // determinism: two identical short runs agree bit-for-bit
    {
        ScenarioConfig c = cfg;
        c.total_time = 10.0;
        const TrialResult a = run_scenario(c, derive_seed(c.seed, 0));
        const TrialResult b = run_scenario(c, derive_seed(c.seed, 0));
        v.check("determinism (seeded rerun)", rates_csv(a) == rates_csv(b));
    }

    // beamformers saturate the power budget; scheme 2 dominates on its objective
    {
        Rng rng(99);
        bool ok = true;
        for (int i = 0; i < 50; ++i) {
            const SensorField field =
                place_sensors(cfg.omega_a, cfg.field_radius, cfg.m_sensors, rng.next_u64());
            const Vec3 q{rng.uniform(-120.0, 120.0), rng.uniform(-120.0, 120.0),
                         cfg.altitude};
            FadingDraw fading;
            fading.rho0 = cfg.rho0;
            const SensorIrsChannel sensed = build_sensor_irs(field, q, grid, fading);
            const IrsGroundChannel hb = build_irs_ground(q, cfg.omega_b, grid, cfg.rho0, 1.0);
            const IrsGroundChannel he = build_irs_ground(q, cfg.omega_e, grid, cfg.rho0, 1.0);
            const Eigen::VectorXd u_g = rank1_phase_vector(sensed.phi_g);
            const ReflectionState refl = reflection_phases(
                irs_response_phases(grid, unit_vector(cfg.omega_b, q)), u_g, 0.0);
            const Eigen::RowVectorXcd rb = effective_row(hb.h, refl.theta, sensed.g);
            const Eigen::RowVectorXcd re = effective_row(he.h, refl.theta, sensed.g);
            const Eigen::MatrixXcd a = quad_form_matrix(rb, cfg.sigma_b2);
            const Eigen::MatrixXcd b = quad_form_matrix(re, cfg.sigma_e2);
            const Beamformer w1 =
                weights_scheme1(hb.h, refl.theta, sensed.g, cfg.power, cfg.sigma_b2);
            const Beamformer w2 = weights_scheme2(a, b, cfg.power);
            ok = ok && std::abs(w1.w.squaredNorm() - cfg.power) <= 1e-9 * cfg.power;
            ok = ok && std::abs(w2.w.squaredNorm() - cfg.power) <= 1e-9 * cfg.power;
            ok = ok && p3b_objective(w2.w, a, b) >= p3b_objective(w1.w, a, b) - 1e-9;
        }
        v.check("beamformer power saturation and scheme-2 dominance", ok);
    }

    std::printf("%s (%d failure%s)\n", v.failures == 0 ? "VALIDATION PASSED" : "VALIDATION FAILED",
                v.failures, v.failures == 1 ? "" : "s");
    return v.failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"UAV-carried IRS secrecy-rate simulator"};
    app.require_subcommand(1);

    CommonArgs run_args;
    CLI::App* run = app.add_subcommand("run", "single seeded flight, rates CSV + manifest");
    add_common(run, run_args);

    CommonArgs sweep_args;
    std::string sweep_param;
    std::vector<double> sweep_values;
    CLI::App* sw = app.add_subcommand("sweep", "parameter sweep with Monte-Carlo averaging");
    add_common(sw, sweep_args);
    sw->add_option("--param", sweep_param, "parameter: T, P, dist_BE, K or r")->required();
    sw->add_option("--values", sweep_values, "comma-separated values")
        ->required()
        ->delimiter(',');

    CommonArgs traj_args;
    CLI::App* traj = app.add_subcommand("trajectory", "planner output (trajectory CSV)");
    add_common(traj, traj_args);

    CommonArgs val_args;
    CLI::App* val = app.add_subcommand("validate", "run the invariant suite");
    add_common(val, val_args);

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            return cmd_run(run_args);
        }
        if (sw->parsed()) {
            return cmd_sweep(sweep_args, sweep_param, sweep_values);
        }
        if (traj->parsed()) {
            return cmd_trajectory(traj_args);
        }
        if (val->parsed()) {
            return cmd_validate(val_args);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
