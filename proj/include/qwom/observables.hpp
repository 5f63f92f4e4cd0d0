#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "qwom/scenario.hpp"
#include "qwom/timeseries.hpp"
#include "qwom/types.hpp"

namespace qwom {

/// |z|^2; the mean-field estimator of an occupation number.
inline double intensity(Complex z) { return std::norm(z); }

enum class Trend { Damped, Sustained, Amplified };

std::string to_string(Trend t);

/// Per-window peak-to-peak amplitudes of one channel and the trend of their
/// envelope. growth_ratio = last window amplitude / first window amplitude.
struct EnvelopeSummary {
    std::vector<double> window_edges;  // window_count + 1 boundaries
    std::vector<double> amplitude;     // peak-to-peak per window
    double growth_ratio = 1.0;
    Trend trend = Trend::Sustained;
    double amplified_above = 0.0;      // thresholds used, recorded
    double damped_below = 0.0;
};

struct EnvelopeOptions {
    double amplified_above = 1.25;
    double damped_below = 0.8;
    double prominence_fraction = 1e-6;  // of the channel range
};

/// Splits [t.front(), t.back()] into window_count equal windows and measures
/// the peak-to-peak swing of the local extrema in each. Requires >= 2 windows
/// and >= 3 extrema per window (AnalysisError otherwise).
EnvelopeSummary envelope_summary(const Eigen::ArrayXd& t,
                                 const Eigen::ArrayXd& x, int window_count,
                                 const EnvelopeOptions& opts = {});

EnvelopeSummary envelope_summary(const TimeSeries& series,
                                 const std::string& channel, int window_count,
                                 const EnvelopeOptions& opts = {});

struct SteadyStateEstimate {
    double value = 0.0;      // mean over the final 20% of samples
    double deviation = 0.0;  // standard deviation over that window
};

SteadyStateEstimate steady_state_estimate(const TimeSeries& series,
                                          const std::string& channel);

/// Normalized residual of the classical-mirror energy balance
///   d/dt(A+B) + 2 kappa A + 2 gamma B - 2 eps_p Re<a> - 4 chi(t) Re<a>^2*
/// with the derivative by centered differences, divided by (A+B+1).
/// For the moments backend the chi term uses the stored Re<a^2>.
/// Needs at least 3 samples.
Eigen::ArrayXd energy_balance_residual(const TimeSeries& series,
                                       const Scenario& sc);

}  // namespace qwom
