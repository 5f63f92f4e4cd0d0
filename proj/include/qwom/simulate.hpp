#pragma once

#include "qwom/ensemble.hpp"
#include "qwom/scenario.hpp"
#include "qwom/timeseries.hpp"

namespace qwom {

/// Deterministic mean-field trajectory of the scenario's variant, sampled at
/// multiples of sample_dt, with A = |<a>|^2 and B = |<b>|^2. Fills the
/// energy-balance residual for the classical-mirror variant.
TimeSeries run_mean_field(const Scenario& sc);

/// Dispatch on sc.backend (MeanField or Moments). Ensemble scenarios go
/// through run_ensemble.
TimeSeries run_deterministic(const Scenario& sc);

}  // namespace qwom
