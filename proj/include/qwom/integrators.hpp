#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <random>

#include "qwom/integrator_settings.hpp"

namespace qwom {

using RhsFn =
    std::function<void(double, const Eigen::VectorXd&, Eigen::VectorXd&)>;

/// Times and states sampled at multiples of sample_dt; one column per sample.
struct SampledPath {
    Eigen::VectorXd t;
    Eigen::MatrixXd states;
    std::size_t step_count = 0;
};

/// One classical fourth-order Runge-Kutta step. Throws IntegrationError on a
/// non-finite result.
Eigen::VectorXd rk4_step(const RhsFn& rhs, double t, const Eigen::VectorXd& y,
                         double h);

/// Deterministic drift (Euler) plus additive Gaussian increments
/// sqrt(h) * noise_amplitude[i] * N(0,1) on every component with a nonzero
/// amplitude. Draw order follows component order.
Eigen::VectorXd euler_maruyama_step(const RhsFn& rhs,
                                    const Eigen::VectorXd& noise_amplitudes,
                                    std::mt19937_64& rng, double t,
                                    const Eigen::VectorXd& y, double h);

/// Advances from t=0 to t_end emitting samples at multiples of sample_dt.
/// Adaptive and fixed Runge-Kutta methods interpolate samples by cubic
/// Hermite between accepted steps; Euler-Maruyama lands samples on its step
/// grid (the fixed step is snapped to an integer divisor of sample_dt).
/// noise_amplitudes may be empty for the deterministic methods.
SampledPath integrate(const RhsFn& rhs, const Eigen::VectorXd& y0,
                      const IntegratorSettings& settings, double t_end,
                      double sample_dt,
                      const Eigen::VectorXd& noise_amplitudes = {},
                      std::mt19937_64* rng = nullptr);

/// SplitMix64 bit finalizer; expands a root seed into per-trajectory streams
/// so trajectory i is reproducible regardless of scheduling.
std::uint64_t splitmix64(std::uint64_t x);
std::mt19937_64 trajectory_rng(std::uint64_t root_seed, std::size_t traj_index);

}  // namespace qwom
