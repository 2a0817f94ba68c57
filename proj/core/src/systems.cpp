#include "rdmd/systems.hpp"

#include <cmath>

#include "rdmd/rng.hpp"

namespace rdmd {

namespace {

void check_dt_steps(double dt, int steps) {
    if (!(dt > 0)) throw ConfigError("systems: dt must be positive");
    if (steps < 2) throw ConfigError("systems: need at least 2 samples");
}

} // namespace

Trajectory simulate_pendulum(const PendulumConfig& cfg, std::uint64_t seed) {
    check_dt_steps(cfg.dt, cfg.steps);
    RngStream init(seed, /*stream=*/0);
    double theta = init.uniform(cfg.theta0_range[0], cfg.theta0_range[1]);
    double omega = init.uniform(cfg.omega0_range[0], cfg.omega0_range[1]);

    const double accel_gain = 3.0 * cfg.g / (2.0 * cfg.l);
    Trajectory traj;
    traj.states.resize(cfg.steps, 2);
    traj.dt = cfg.dt;
    traj.seed = seed;
    traj.system_tag = "pendulum";
    for (int k = 0; k < cfg.steps; ++k) {
        traj.states(k, 0) = theta;
        traj.states(k, 1) = omega;
        // simultaneous explicit Euler: both updates read the step-k state
        const double theta_next = theta + cfg.dt * omega;
        const double omega_next = omega - cfg.dt * accel_gain * std::sin(theta);
        theta = theta_next;
        omega = omega_next;
    }
    return traj;
}

Eigen::Vector3d lorenz_rk4_step(const LorenzConfig& cfg, const Eigen::Vector3d& state) {
    auto field = [&cfg](const Eigen::Vector3d& u) -> Eigen::Vector3d {
        return {cfg.sigma * (u.y() - u.x()),
                u.x() * (cfg.rho - cfg.s * u.z()) - u.y(),
                cfg.s * u.x() * u.y() - cfg.beta * u.z()};
    };
    const double h = cfg.dt;
    const Eigen::Vector3d k1 = field(state);
    const Eigen::Vector3d k2 = field(state + 0.5 * h * k1);
    const Eigen::Vector3d k3 = field(state + 0.5 * h * k2);
    const Eigen::Vector3d k4 = field(state + h * k3);
    return state + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

Trajectory simulate_lorenz(const LorenzConfig& cfg, const Eigen::Vector3d& init,
                           std::uint64_t seed) {
    check_dt_steps(cfg.dt, cfg.steps);
    if (cfg.transient < 0) throw ConfigError("lorenz: transient must be >= 0");

    Eigen::Vector3d state = init;
    for (int k = 0; k < cfg.transient; ++k) {
        state = lorenz_rk4_step(cfg, state);
        if (state.norm() > 1e8) throw NumericError("lorenz: trajectory diverged during transient");
    }

    Trajectory traj;
    traj.states.resize(cfg.steps, 3);
    traj.dt = cfg.dt;
    traj.seed = seed;
    traj.system_tag = "lorenz";
    for (int k = 0; k < cfg.steps; ++k) {
        traj.states.row(k) = state.transpose();
        state = lorenz_rk4_step(cfg, state);
        if (state.norm() > 1e8) throw NumericError("lorenz: trajectory diverged");
    }
    return traj;
}

Trajectory simulate_oscillators(const OscillatorConfig& cfg, std::uint64_t seed) {
    if (!(cfg.dt > 0)) throw ConfigError("oscillators: dt must be positive");
    if (!(cfg.zeta > 0 && cfg.zeta < 1)) throw ConfigError("oscillators: zeta must be in (0,1)");
    if (cfg.substeps < 1) throw ConfigError("oscillators: substeps must be >= 1");
    const int samples = static_cast<int>(std::llround(cfg.t_end / cfg.dt));
    if (samples < 2) throw ConfigError("oscillators: t_end/dt must give at least 2 samples");

    RngStream noise1(seed, 1), noise2(seed, 2), meas(seed, 3);
    const double h = cfg.dt / cfg.substeps;
    const double sqrt_h = std::sqrt(h);

    double x1 = cfg.x10, v1 = cfg.v10, x2 = cfg.x20, v2 = cfg.v20;
    Trajectory traj;
    traj.states.resize(samples, 5);
    traj.dt = cfg.dt;
    traj.seed = seed;
    traj.system_tag = "oscillators"; // columns: obs, x1, v1, x2, v2
    for (int k = 0; k < samples; ++k) {
        const double obs = x1 + x2 + cfg.meas_noise_std * meas.normal();
        traj.states(k, 0) = obs;
        traj.states(k, 1) = x1;
        traj.states(k, 2) = v1;
        traj.states(k, 3) = x2;
        traj.states(k, 4) = v2;
        for (int s = 0; s < cfg.substeps; ++s) {
            // Euler-Maruyama, simultaneous update from the substep state
            const double a1 = -2.0 * cfg.zeta * cfg.omega1 * v1 - cfg.omega1 * cfg.omega1 * x1;
            const double a2 = -2.0 * cfg.zeta * cfg.omega2 * v2 - cfg.omega2 * cfg.omega2 * x2;
            const double x1n = x1 + h * v1;
            const double v1n = v1 + h * a1 + cfg.sigma1 * sqrt_h * noise1.normal();
            const double x2n = x2 + h * v2;
            const double v2n = v2 + h * a2 + cfg.sigma2 * sqrt_h * noise2.normal();
            x1 = x1n;
            v1 = v1n;
            x2 = x2n;
            v2 = v2n;
        }
    }
    require_finite(traj.states, "oscillator trajectory");
    return traj;
}

double pendulum_energy(const PendulumConfig& cfg, double theta, double omega) {
    return 0.5 * omega * omega + (3.0 * cfg.g / (2.0 * cfg.l)) * (1.0 - std::cos(theta));
}

} // namespace rdmd
