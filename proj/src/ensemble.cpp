#include "qwom/ensemble.hpp"

#include <cmath>
#include <future>
#include <limits>

#include "qwom/error.hpp"
#include "qwom/integrators.hpp"
#include "qwom/models.hpp"

namespace qwom {

namespace {

constexpr int kStatChannels = 8;  // re_a, im_a, re_b, im_b, q, p, A, B

Eigen::VectorXd noise_amplitudes(const Scenario& sc) {
    Eigen::VectorXd amp = Eigen::VectorXd::Zero(kMeanFieldDim);
    // Thermal Brownian force on the mirror momentum only:
    // <zeta(t) zeta(t')> = gamma_m (2 n_th + 1) delta(t - t').
    amp[5] = std::sqrt(sc.params.gamma_m * (2.0 * sc.params.n_th + 1.0));
    if (sc.optical_noise == OpticalNoise::Symmetric) {
        // Complex increments of variance kappa h / 2 (gamma h / 2): each
        // quadrature carries half of it.
        amp[0] = amp[1] = std::sqrt(sc.params.kappa) / 2.0;
        amp[2] = amp[3] = std::sqrt(sc.params.gamma) / 2.0;
    }
    return amp;
}

Eigen::MatrixXd stat_channels(const SampledPath& path) {
    const Eigen::Index n = path.t.size();
    Eigen::MatrixXd x(n, kStatChannels);
    for (int c = 0; c < kMeanFieldDim; ++c) {
        x.col(c) = path.states.row(c).transpose();
    }
    x.col(6) = x.col(0).array().square() + x.col(1).array().square();  // A
    x.col(7) = x.col(2).array().square() + x.col(3).array().square();  // B
    return x;
}

struct Accum {
    Eigen::VectorXd t;
    Eigen::MatrixXd sum;
    Eigen::MatrixXd sum_sq;
};

SampledPath trajectory_path(const Scenario& sc, std::size_t traj_index) {
    std::mt19937_64 rng = trajectory_rng(sc.seed, traj_index);
    try {
        return integrate(make_mean_field_rhs(sc), pack(sc.initial),
                         sc.integrator, sc.t_end, sc.sample_dt,
                         noise_amplitudes(sc), &rng);
    } catch (const Error& e) {
        throw Error("trajectory " + std::to_string(traj_index) + ": " +
                    e.what());
    }
}

// Pairwise reduction over the index range [lo, hi); the tree shape depends
// only on the range, so the floating-point result is scheduling-invariant.
Accum reduce_range(const Scenario& sc, std::size_t lo, std::size_t hi,
                   unsigned parallel_depth) {
    if (hi - lo == 1) {
        const SampledPath path = trajectory_path(sc, lo);
        Accum a;
        a.t = path.t;
        a.sum = stat_channels(path);
        a.sum_sq = a.sum.array().square();
        return a;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    Accum left, right;
    if (parallel_depth > 0) {
        auto fut = std::async(std::launch::async, reduce_range, std::cref(sc),
                              lo, mid, parallel_depth - 1);
        right = reduce_range(sc, mid, hi, parallel_depth - 1);
        left = fut.get();
    } else {
        left = reduce_range(sc, lo, mid, 0);
        right = reduce_range(sc, mid, hi, 0);
    }
    left.sum += right.sum;
    left.sum_sq += right.sum_sq;
    return left;
}

TimeSeries series_from_stats(const Eigen::VectorXd& t,
                             const Eigen::MatrixXd& values,
                             const std::string& estimator) {
    TimeSeries s;
    s.backend = "ensemble";
    s.estimator = estimator;
    s.t = t.array();
    s.re_a = values.col(0).array();
    s.im_a = values.col(1).array();
    s.re_b = values.col(2).array();
    s.im_b = values.col(3).array();
    s.q = values.col(4).array();
    s.p = values.col(5).array();
    s.photon = values.col(6).array();
    s.exciton = values.col(7).array();
    s.residual = Eigen::ArrayXd::Constant(
        t.size(), std::numeric_limits<double>::quiet_NaN());
    return s;
}

}  // namespace

TimeSeries run_trajectory(const Scenario& sc, std::size_t traj_index) {
    validate(sc);
    const SampledPath path = trajectory_path(sc, traj_index);
    TimeSeries s = series_from_stats(path.t, stat_channels(path),
                                     "abs2_of_mean");
    s.step_count = path.step_count;
    return s;
}

EnsembleResult run_ensemble(const Scenario& sc, unsigned n_workers) {
    validate(sc);
    if (sc.backend != Backend::Ensemble) {
        throw ScenarioError("run_ensemble needs backend Ensemble, got " +
                            to_string(sc.backend));
    }
    unsigned depth = 0;
    while ((1u << depth) < std::max(1u, n_workers)) ++depth;

    const Accum acc = reduce_range(sc, 0, sc.n_traj, depth);
    const double n = static_cast<double>(sc.n_traj);

    const Eigen::MatrixXd mean = acc.sum / n;
    Eigen::MatrixXd se = Eigen::MatrixXd::Zero(acc.sum.rows(), acc.sum.cols());
    if (sc.n_traj > 1) {
        // Unbiased variance of the mean from the pairwise sums.
        se = ((acc.sum_sq - acc.sum.array().square().matrix() / n) /
              (n - 1.0) / n)
                 .array()
                 .max(0.0)
                 .sqrt()
                 .matrix();
    }

    EnsembleResult result;
    result.n_traj = sc.n_traj;
    result.root_seed = sc.seed;
    result.mean_series = series_from_stats(acc.t, mean, "mean_of_abs2");
    result.stderr_series = series_from_stats(acc.t, se, "stderr");
    return result;
}

}  // namespace qwom
