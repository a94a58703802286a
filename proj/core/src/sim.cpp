// SPDX-License-Identifier: Apache-2.0
#include "airs/sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <thread>

#include "airs/errors.hpp"
#include "airs/rng.hpp"

namespace airs {

namespace {

void append_num(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

FadingDraw draw_fading(Rng& rng, const ScenarioConfig& cfg) {
    FadingDraw f;
    f.rho0 = cfg.rho0;
    f.varsigma_g = rng.exponential();
    f.varsigma_b = rng.exponential();
    const double eve_draw = rng.exponential();
    f.varsigma_e = cfg.share_eve_fading ? f.varsigma_b : eve_draw;
    return f;
}

PlannedTrajectory frozen_trajectory(const ScenarioConfig& cfg) {
    PlannedTrajectory traj;
    const Vec3 fix{cfg.omega_fix_irs.x, cfg.omega_fix_irs.y, cfg.altitude};
    traj.start = fix;
    traj.points.assign(static_cast<std::size_t>(cfg.n_samples()), fix);
    traj.steps.assign(static_cast<std::size_t>(cfg.n_samples()),
                      StepInfo{StepKind::Hover, 0.0, 0.0, 0.0});
    return traj;
}

} // namespace

int ScenarioConfig::n_samples() const {
    const double n = total_time / dt;
    return static_cast<int>(std::llround(n));
}

FlightPlan ScenarioConfig::flight_plan() const {
    FlightPlan plan;
    plan.total_time = total_time;
    plan.samples = n_samples();
    plan.dt = dt;
    plan.speed = speed;
    plan.altitude = altitude;
    plan.start = {q_start.x, q_start.y, altitude};
    return plan;
}

SampleEvaluation evaluate_sample(const Vec3& q, const SensorField& field, const IrsGrid& grid,
                                 const ScenarioConfig& cfg, const FadingDraw& fading,
                                 Scheme scheme, bool with_bounds) {
    const SensorIrsChannel sensed = build_sensor_irs(field, q, grid, fading);
    const IrsGroundChannel ch_b =
        build_irs_ground(q, cfg.omega_b, grid, fading.rho0, fading.varsigma_b);
    const IrsGroundChannel ch_e =
        build_irs_ground(q, cfg.omega_e, grid, fading.rho0, fading.varsigma_e);

    const Eigen::VectorXd u_g = rank1_phase_vector(sensed.phi_g);
    // steering phases along the ground-to-UAV direction of the main receiver
    const Eigen::VectorXd steer = irs_response_phases(grid, unit_vector(cfg.omega_b, q));
    const ReflectionState refl = reflection_phases(steer, u_g, 0.0);

    const Eigen::RowVectorXcd row_b = effective_row(ch_b.h, refl.theta, sensed.g);
    const Eigen::RowVectorXcd row_e = effective_row(ch_e.h, refl.theta, sensed.g);

    Beamformer bf;
    if (scheme == Scheme::One) {
        bf = weights_scheme1(ch_b.h, refl.theta, sensed.g, cfg.power, cfg.sigma_b2);
    } else {
        bf = weights_scheme2(quad_form_matrix(row_b, cfg.sigma_b2),
                             quad_form_matrix(row_e, cfg.sigma_e2), cfg.power);
    }

    SampleEvaluation out;
    out.snr.sigma_b2 = cfg.sigma_b2;
    out.snr.sigma_e2 = cfg.sigma_e2;
    out.snr.gamma_b = std::norm((row_b * bf.w).value()) / cfg.sigma_b2;
    out.snr.gamma_e = std::norm((row_e * bf.w).value()) / cfg.sigma_e2;
    const RatePair rate = secrecy_rate(out.snr.gamma_b, out.snr.gamma_e);
    out.snr.rate_raw = rate.raw;
    out.snr.rate_clamped = rate.clamped;

    if (with_bounds) {
        const int m = field.count();
        Eigen::VectorXd d_sensors(m);
        std::vector<Vec3> dirs_sensor;
        dirs_sensor.reserve(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            const Vec3& s = field.positions[static_cast<std::size_t>(i)];
            d_sensors[i] = distance(s, q);
            dirs_sensor.push_back(unit_vector(s, q));
        }
        const Vec3 dir_e = unit_vector(q, cfg.omega_e);
        const Vec3 dir_b = unit_vector(cfg.omega_b, q);
        const Vec3 dir_centroid = unit_vector(field.center, q);

        BoundsReport& rep = out.bounds;
        rep.pbar = cfg.power / cfg.sigma_b2;
        rep.chi_b = chi_bob(ch_b.gain, sensed.gain_cmr, sensed.bulk_phase, ch_b.bulk_phase,
                            refl.theta_com, grid.size());
        const EveBound eve =
            zeta_and_chi_eve(grid, dir_e, dir_b, dirs_sensor, dir_centroid, u_g, ch_e.gain,
                             sensed.gain_cmr, sensed.bulk_phase, ch_e.bulk_phase,
                             refl.theta_com);
        rep.chi_e = eve.chi;
        rep.zeta = eve.zeta_centroid;

        const Eigen::VectorXd coh_b =
            Eigen::VectorXd::Constant(m, static_cast<double>(grid.size()));
        Eigen::VectorXd coh_e(m);
        for (int i = 0; i < m; ++i) {
            coh_e[i] = std::abs(eve.zeta_per_sensor[static_cast<std::size_t>(i)]);
        }
        rep.gamma_b_ub = snr_upper_bound(cfg.power / cfg.sigma_b2, fading.rho0,
                                         fading.varsigma_b, fading.varsigma_g, coh_b,
                                         ch_b.dist, d_sensors);
        rep.gamma_e_ub = snr_upper_bound(cfg.power / cfg.sigma_e2, fading.rho0,
                                         fading.varsigma_e, fading.varsigma_g, coh_e,
                                         ch_e.dist, d_sensors);
    }
    return out;
}

StepObjective make_planner_objective(const ScenarioConfig& cfg, const SensorField& field,
                                     PlannerObjectiveKind kind) {
    const IrsGrid grid = cfg.grid();
    if (kind == PlannerObjectiveKind::ExactIntegrand) {
        const Scheme scheme = (cfg.scheme == Scheme::FixedIrs) ? Scheme::Two : cfg.scheme;
        FadingDraw mean_fading;
        mean_fading.rho0 = cfg.rho0;
        return [cfg, field, grid, scheme, mean_fading](const Vec3& q) {
            return evaluate_sample(q, field, grid, cfg, mean_fading, scheme, false)
                .snr.rate_raw;
        };
    }
    const bool worst_case = (kind == PlannerObjectiveKind::BoundWorstCase);
    return [cfg, field, grid, worst_case](const Vec3& q) {
        const int m = field.count();
        Eigen::VectorXd d_sensors(m);
        std::vector<Vec3> dirs_sensor;
        dirs_sensor.reserve(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            const Vec3& s = field.positions[static_cast<std::size_t>(i)];
            d_sensors[i] = distance(s, q);
            dirs_sensor.push_back(unit_vector(s, q));
        }
        const Eigen::VectorXd coh_b =
            Eigen::VectorXd::Constant(m, static_cast<double>(grid.size()));
        Eigen::VectorXd coh_e = coh_b;
        if (!worst_case) {
            const Eigen::VectorXd u_g =
                rank1_phase_vector(build_sensor_irs(field, q, grid, FadingDraw{}).phi_g);
            const Vec3 dir_e = unit_vector(q, cfg.omega_e);
            const Vec3 dir_b = unit_vector(cfg.omega_b, q);
            for (int i = 0; i < m; ++i) {
                coh_e[i] = std::abs(zeta_sum(grid, dir_e, dir_b,
                                             dirs_sensor[static_cast<std::size_t>(i)], u_g));
            }
        }
        const double gamma_b_ub =
            snr_upper_bound(cfg.power / cfg.sigma_b2, cfg.rho0, 1.0, 1.0, coh_b,
                            distance(q, cfg.omega_b), d_sensors);
        const double gamma_e_ub =
            snr_upper_bound(cfg.power / cfg.sigma_e2, cfg.rho0, 1.0, 1.0, coh_e,
                            distance(q, cfg.omega_e), d_sensors);
        return secrecy_rate(gamma_b_ub, gamma_e_ub).raw;
    };
}

TrialResult run_scenario(const ScenarioConfig& cfg, std::uint64_t trial_seed) {
    const IrsGrid grid = cfg.grid();
    TrialResult trial;
    trial.field = place_sensors(cfg.omega_a, cfg.field_radius, cfg.m_sensors,
                                derive_seed(trial_seed, 1));

    if (cfg.scheme == Scheme::FixedIrs) {
        trial.trajectory = frozen_trajectory(cfg);
    } else {
        const PlannerObjectiveKind kind =
            cfg.planner_objective < 0 ? kDefaultPlannerObjective
                                      : static_cast<PlannerObjectiveKind>(cfg.planner_objective);
        trial.trajectory = plan_trajectory(cfg.flight_plan(), cfg.omega_a, cfg.omega_b,
                                           make_planner_objective(cfg, trial.field, kind));
    }

    const Scheme scheme = (cfg.scheme == Scheme::FixedIrs) ? Scheme::Two : cfg.scheme;
    Rng rng(derive_seed(trial_seed, 2));
    const int n = cfg.n_samples();
    trial.samples.reserve(static_cast<std::size_t>(n));
    double sum_raw = 0.0;
    double sum_clamped = 0.0;
    for (int i = 0; i < n; ++i) {
        const FadingDraw fading = draw_fading(rng, cfg);
        const SampleEvaluation ev = evaluate_sample(
            trial.trajectory.points[static_cast<std::size_t>(i)], trial.field, grid, cfg,
            fading, scheme, true);
        trial.samples.push_back({ev.snr.gamma_b, ev.snr.gamma_e, ev.snr.rate_raw,
                                 ev.snr.rate_clamped, ev.bounds.gamma_b_ub,
                                 ev.bounds.gamma_e_ub});
        sum_raw += ev.snr.rate_raw;
        sum_clamped += ev.snr.rate_clamped;
    }
    trial.avg_raw = sum_raw / n;
    trial.avg_clamped = sum_clamped / n;
    return trial;
}

TrialResult fixed_irs_baseline(const ScenarioConfig& cfg, std::uint64_t trial_seed) {
    ScenarioConfig fixed = cfg;
    fixed.scheme = Scheme::FixedIrs;
    return run_scenario(fixed, trial_seed);
}

int resolve_thread_count(int requested) {
    if (requested > 0) {
        return requested;
    }
    if (const char* env = std::getenv("AIRS_SIM_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) {
            return n;
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

AggregateResult monte_carlo(const ScenarioConfig& cfg, int trials, int trial_offset,
                            int threads) {
    if (trials < 1) {
        throw std::invalid_argument("monte_carlo: need at least one trial");
    }
    AggregateResult agg;
    agg.trials = trials;
    agg.trial_avg_clamped.resize(static_cast<std::size_t>(trials));
    agg.trial_avg_raw.resize(static_cast<std::size_t>(trials));

    const int workers = std::min(resolve_thread_count(threads), trials);
    auto run_slice = [&](int worker) {
        for (int t = worker; t < trials; t += workers) {
            const std::uint64_t trial_seed =
                derive_seed(cfg.seed, static_cast<std::uint64_t>(trial_offset + t));
            const TrialResult trial = run_scenario(cfg, trial_seed);
            agg.trial_avg_clamped[static_cast<std::size_t>(t)] = trial.avg_clamped;
            agg.trial_avg_raw[static_cast<std::size_t>(t)] = trial.avg_raw;
        }
    };
    if (workers <= 1) {
        run_slice(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back(run_slice, w);
        }
        for (auto& th : pool) {
            th.join();
        }
    }

    double sum_c = 0.0;
    double sum_r = 0.0;
    for (int t = 0; t < trials; ++t) {
        sum_c += agg.trial_avg_clamped[static_cast<std::size_t>(t)];
        sum_r += agg.trial_avg_raw[static_cast<std::size_t>(t)];
    }
    agg.mean_clamped = sum_c / trials;
    agg.mean_raw = sum_r / trials;

    double var = 0.0;
    for (double v : agg.trial_avg_clamped) {
        var += (v - agg.mean_clamped) * (v - agg.mean_clamped);
    }
    const double sd = (trials > 1) ? std::sqrt(var / (trials - 1)) : 0.0;
    const double half = 1.959963984540054 * sd / std::sqrt(static_cast<double>(trials));
    agg.ci_low = agg.mean_clamped - half;
    agg.ci_high = agg.mean_clamped + half;
    return agg;
}

SweepParam sweep_param_from_string(const std::string& name) {
    if (name == "T") return SweepParam::TotalTime;
    if (name == "P") return SweepParam::Power;
    if (name == "dist_BE") return SweepParam::BobEveDistance;
    if (name == "K") return SweepParam::Elements;
    if (name == "r") return SweepParam::FieldRadius;
    throw ConfigError("unknown sweep parameter '" + name + "' (expected T, P, dist_BE, K, r)");
}

std::string to_string(SweepParam p) {
    switch (p) {
        case SweepParam::TotalTime: return "T";
        case SweepParam::Power: return "P";
        case SweepParam::BobEveDistance: return "dist_BE";
        case SweepParam::Elements: return "K";
        case SweepParam::FieldRadius: return "r";
    }
    return "?";
}

ScenarioConfig apply_sweep_value(const ScenarioConfig& cfg, SweepParam param, double value) {
    ScenarioConfig next = cfg;
    switch (param) {
        case SweepParam::TotalTime: {
            next.total_time = value;
            const double n = value / next.dt;
            if (std::abs(n - std::llround(n)) > 1e-9) {
                throw ConfigError("sweep T: N = T/alpha must be integral");
            }
            break;
        }
        case SweepParam::Power:
            next.power_dbm = value;
            next.power = std::pow(10.0, value / 10.0);
            break;
        case SweepParam::BobEveDistance: {
            if (!(value > 0.0)) {
                throw ConfigError("sweep dist_BE: distance must be positive");
            }
            Vec3 dir{-1.0, 0.0, 0.0};
            if (distance(cfg.omega_b, cfg.omega_e) > 0.0) {
                dir = unit_vector(cfg.omega_b, cfg.omega_e);
            }
            next.omega_e = cfg.omega_b + value * dir;
            break;
        }
        case SweepParam::Elements: {
            const int k = static_cast<int>(std::llround(value));
            const int side = static_cast<int>(std::llround(std::sqrt(static_cast<double>(k))));
            if (side * side != k || k < 1) {
                throw ConfigError("sweep K: values must be perfect squares");
            }
            next.kx = side;
            next.ky = side;
            break;
        }
        case SweepParam::FieldRadius:
            if (value < 0.0) {
                throw ConfigError("sweep r: radius must be non-negative");
            }
            next.field_radius = value;
            break;
    }
    return next;
}

std::vector<SweepRow> sweep(const ScenarioConfig& cfg, SweepParam param,
                            const std::vector<double>& values, int trials, int threads) {
    if (values.empty()) {
        throw ConfigError("sweep: value list is empty");
    }
    std::vector<SweepRow> rows;
    rows.reserve(values.size());
    for (double v : values) {
        const ScenarioConfig scenario = apply_sweep_value(cfg, param, v);
        rows.push_back({v, monte_carlo(scenario, trials, 0, threads)});
    }
    return rows;
}

std::string rates_csv(const TrialResult& trial) {
    std::string out = "n,gammaB,gammaE,rate_raw,rate_clamped,gammaB_ub,gammaE_ub\n";
    for (std::size_t i = 0; i < trial.samples.size(); ++i) {
        const SampleRecord& s = trial.samples[i];
        out += std::to_string(i + 1);
        for (double v : {s.gamma_b, s.gamma_e, s.rate_raw, s.rate_clamped, s.gamma_b_ub,
                         s.gamma_e_ub}) {
            out += ',';
            append_num(out, v);
        }
        out += '\n';
    }
    return out;
}

std::string trajectory_csv(const PlannedTrajectory& traj) {
    std::string out = "n,x,y,z,displacement,epsilon_used,ring_radius\n";
    for (std::size_t i = 0; i < traj.points.size(); ++i) {
        const Vec3& p = traj.points[i];
        const StepInfo& s = traj.steps[i];
        out += std::to_string(i + 1);
        for (double v : {p.x, p.y, p.z, s.displacement, s.epsilon, s.ring_radius}) {
            out += ',';
            append_num(out, v);
        }
        out += '\n';
    }
    return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "param_value,mean,ci_low,ci_high,trials\n";
    for (const SweepRow& row : rows) {
        append_num(out, row.param_value);
        out += ',';
        append_num(out, row.aggregate.mean_clamped);
        out += ',';
        append_num(out, row.aggregate.ci_low);
        out += ',';
        append_num(out, row.aggregate.ci_high);
        out += ',';
        out += std::to_string(row.aggregate.trials);
        out += '\n';
    }
    return out;
}

} // namespace airs
