#pragma once

#include <cstdint>

#include "qwom/scenario.hpp"
#include "qwom/timeseries.hpp"

namespace qwom {

/// Ensemble mean and standard error per sample. Identical root_seed and
/// n_traj give identical results for any worker count: trajectories are
/// aggregated over a pairwise-summation tree keyed on trajectory index.
struct EnsembleResult {
    TimeSeries mean_series;
    TimeSeries stderr_series;
    std::size_t n_traj = 0;
    std::uint64_t root_seed = 0;
};

/// One Euler-Maruyama trajectory with the per-index RNG stream.
TimeSeries run_trajectory(const Scenario& sc, std::size_t traj_index);

/// Runs sc.n_traj trajectories on up to n_workers threads.
EnsembleResult run_ensemble(const Scenario& sc, unsigned n_workers = 1);

}  // namespace qwom
