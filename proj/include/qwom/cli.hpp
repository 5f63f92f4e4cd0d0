#pragma once

#include <string>
#include <vector>

namespace qwom {

/// Entry point behind the qwom binary. Verbs: run, sweep, list-presets,
/// plot, validate, defaults. Returns the process exit status.
int run_command(const std::vector<std::string>& args);

}  // namespace qwom
