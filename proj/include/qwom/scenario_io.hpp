#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "qwom/scenario.hpp"

namespace qwom {

/// Parses the flat key-value scenario format. Unknown keys are a hard error;
/// missing keys take the documented defaults; the result is validated.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::filesystem::path& file);

/// Serializes every field, one "key = value" line each, with enough digits
/// to round-trip exactly.
std::string write_scenario(const Scenario& sc);

/// Sets one scenario field by its scenario-file key (numeric keys only).
void set_numeric_field(Scenario& sc, const std::string& key, double value);

/// A base scenario with one or more swept parameter axes, expanded as a
/// Cartesian product.
struct SweepSpec {
    Scenario base;
    std::vector<std::pair<std::string, std::vector<double>>> axes;
    std::string output_dir;
    std::size_t max_runs = 10000;
};

struct SweepEntry {
    Scenario scenario;
    std::string label;  // base name plus "__key_value" per axis
};

/// Sweep file format: "base = <preset-or-scenario-file>", optional
/// "output = <dir>", and one "axis = <key> <v1> <v2> ..." line per axis.
SweepSpec parse_sweep(const std::string& text,
                      const std::filesystem::path& base_dir = ".");
SweepSpec load_sweep(const std::filesystem::path& file);

/// Cartesian expansion in axis-major order; throws ScenarioError when the
/// product exceeds spec.max_runs.
std::vector<SweepEntry> expand_sweep(const SweepSpec& spec);

}  // namespace qwom
