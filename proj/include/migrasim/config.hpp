#pragma once

#include <map>
#include <string>
#include <vector>

#include "migrasim/engine.hpp"

namespace migrasim {

inline constexpr int kSchemaVersion = 1;

/// Optional grid section of a config file: dotted parameter path -> list
/// of values. Expanded to a cross product of scenarios by expand_sweep.
using SweepGrid = std::map<std::string, std::vector<double>>;

struct ParsedConfig {
    ScenarioConfig scenario;
    SweepGrid sweep; // empty when the file has no "sweep" section
};

/// Parse and validate a JSON config. Omitted optional fields take the
/// documented defaults; unknown keys are rejected. Throws
/// std::runtime_error with a field-qualified message on any problem.
ParsedConfig parse_config(const std::string& text);

/// Scenario back to canonical JSON (sweep section not included).
std::string serialize_config(const ScenarioConfig& config);

/// Apply one dotted-path override, e.g. "dynamics.a" = 0.002.
void apply_override(ScenarioConfig& config, const std::string& path,
                    double value);

struct SweepCell {
    std::size_t index;
    ScenarioConfig scenario; // per-cell seed already applied
    std::map<std::string, double> assignment;
};

/// Cross product of the grid in deterministic (lexicographic key, listed
/// value order) enumeration; cell seeds derive from the base seed via
/// cell_seed().
std::vector<SweepCell> expand_sweep(const ScenarioConfig& base,
                                    const SweepGrid& grid);

} // namespace migrasim
