#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <string>

namespace qwom {

/// Sampled trajectory of the observables. All channels have equal length and
/// t is strictly increasing. residual is the normalized energy-balance
/// residual (classical-mirror variant only; NaN otherwise). re_a_sq holds
/// Re<a^2> for the moments backend (empty otherwise, never serialized).
struct TimeSeries {
    Eigen::ArrayXd t;
    Eigen::ArrayXd re_a, im_a, re_b, im_b;
    Eigen::ArrayXd q, p;
    Eigen::ArrayXd photon;    // A(t)
    Eigen::ArrayXd exciton;   // B(t)
    Eigen::ArrayXd residual;
    Eigen::ArrayXd re_a_sq;

    std::string backend;     // "mean_field" | "moments" | "ensemble"
    std::string estimator;   // "abs2_of_mean" | "normal_ordered" | "mean_of_abs2"
    std::size_t step_count = 0;

    Eigen::Index size() const { return t.size(); }

    /// Channel access by CSV column name; throws AnalysisError on bad name.
    const Eigen::ArrayXd& channel(const std::string& name) const;
};

}  // namespace qwom
