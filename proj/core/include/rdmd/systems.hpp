#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "rdmd/numerics.hpp"

namespace rdmd {

/// Time-stamped state sequence with fixed sampling step. Row k of
/// `states` is the state at time k * dt.
struct Trajectory {
    RealMatrix states; // length x state_dim
    double dt = 0.0;
    std::uint64_t seed = 0;
    std::string system_tag;

    Eigen::Index length() const { return states.rows(); }
    Eigen::Index dimension() const { return states.cols(); }
};

struct PendulumConfig {
    double g = 9.8;
    double l = 1.0;
    double dt = 0.2;
    int steps = 1500; // number of emitted samples
    std::array<double, 2> theta0_range{0.0, 2.0 * 3.14159265358979323846};
    std::array<double, 2> omega0_range{-5.0, 5.0};
};

struct LorenzConfig {
    double sigma = 10.0;
    double beta = 8.0 / 3.0;
    double rho = 40.0;
    double s = 0.1;
    double dt = 0.05;
    int steps = 2000;    // emitted samples, after the transient
    int transient = 500; // discarded leading steps
};

inline constexpr double kPi = 3.14159265358979323846;

struct OscillatorConfig {
    double omega1 = 3.0 * kPi / 5.0;
    double omega2 = 6.0 * kPi / 5.0;
    double zeta = 0.2;
    double sigma1 = 0.05;
    double sigma2 = 0.15;
    double meas_noise_std = 0.015;
    double dt = 0.1;
    double t_end = 190.0;
    int substeps = 100; // Euler-Maruyama substeps per emitted sample
    double x10 = 1.0, v10 = 0.0, x20 = 1.0, v20 = 0.0;
};

/// Pendulum theta'' = -(3g/2l) sin(theta), explicit Euler with the
/// simultaneous update (both components advanced from the step-k state).
/// States are (theta, theta_dot) rows; initial state drawn uniformly from
/// the configured ranges using `seed`.
Trajectory simulate_pendulum(const PendulumConfig& cfg, std::uint64_t seed);

/// One classical 4th-order step of the scaled Lorenz field
/// x' = sigma (y - x), y' = x (rho - s z) - y, z' = s x y - beta z.
Eigen::Vector3d lorenz_rk4_step(const LorenzConfig& cfg, const Eigen::Vector3d& state);

/// Lorenz trajectory; `cfg.transient` leading steps are discarded. Throws
/// NumericError if the state norm exceeds 1e8.
Trajectory simulate_lorenz(const LorenzConfig& cfg, const Eigen::Vector3d& init,
                           std::uint64_t seed);

/// Two independent damped oscillators driven by thermal noise,
/// x_i'' = -2 zeta omega_i x_i' - omega_i^2 x_i + sigma_i eta_i,
/// integrated by Euler-Maruyama on cfg.substeps internal steps per
/// emitted sample. Emits rows (obs, x1, v1, x2, v2) where
/// obs = x1 + x2 + measurement noise; the internal states stay available
/// for ground-truth comparisons. RNG streams: 1 -> oscillator-1 noise,
/// 2 -> oscillator-2 noise, 3 -> measurement noise.
Trajectory simulate_oscillators(const OscillatorConfig& cfg, std::uint64_t seed);

/// Mechanical energy (1/2) w^2 + (3g/2l)(1 - cos theta) of a pendulum state.
double pendulum_energy(const PendulumConfig& cfg, double theta, double omega);

} // namespace rdmd
