#pragma once

#include <filesystem>

#include "qwom/scenario.hpp"
#include "qwom/timeseries.hpp"

namespace qwom {

/// Writes "t,re_a,im_a,re_b,im_b,q,p,A,B,residual" rows with 12 significant
/// digits and LF newlines, plus a sidecar JSON (same path, .json) recording
/// the full scenario, backend, estimator, integrator settings, seed and
/// artifact version. Files appear atomically (write-to-temp, rename).
void write_csv(const TimeSeries& series, const Scenario& sc,
               const std::filesystem::path& csv_path);

/// Reads a CSV written by write_csv.
TimeSeries read_csv(const std::filesystem::path& csv_path);

/// Reconstructs the scenario recorded in a sidecar JSON.
Scenario scenario_from_sidecar(const std::filesystem::path& json_path);

}  // namespace qwom
