#pragma once

#include <string>
#include <vector>

#include "qwom/scenario.hpp"

namespace qwom {

/// Figure presets. Each run grid from the source material maps to one name;
/// the figure pairs that differ only in the plotted channel (fig3 vs fig2,
/// fig7c/d vs fig7a/b) share dynamics but are listed for convenience.
/// Throws ScenarioError for an unknown name.
Scenario preset(const std::string& name);

std::vector<std::string> preset_names();

bool is_preset(const std::string& name);

/// The two modulation amplitudes published with each preset
/// (epsilon in {0.1, 0.2} or eta in {0.1, 0.4}); the returned scenario of
/// preset() carries the first one.
std::vector<double> preset_modulation_sweep(const std::string& name);

/// Name of the swept modulation key for the preset ("epsilon" or "eta").
std::string preset_sweep_key(const std::string& name);

}  // namespace qwom
