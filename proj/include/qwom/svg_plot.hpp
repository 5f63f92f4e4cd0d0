#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qwom/timeseries.hpp"

namespace qwom {

/// Renders stacked per-channel line plots (polylines, linear axes) into one
/// SVG file. x_label is the scaled-time axis name, e.g. "gamma t".
void write_svg_plot(const TimeSeries& series,
                    const std::vector<std::string>& channels,
                    const std::string& x_label,
                    const std::filesystem::path& svg_path);

}  // namespace qwom
