#pragma once

#include <string>

#include "migrasim/engine.hpp"

namespace migrasim {

/// CSV series: header row, one row per month, LF line endings, floats in
/// shortest round-trip decimal form. Columns are named so Figs.-style
/// plots (t_days vs n_urban, t_days vs bv) fall out directly.
std::string series_csv(const SimResult& result);

/// JSON summary: schema_version, config echo, verdict, summary metrics,
/// diverged flag and run status.
std::string summary_json(const ScenarioConfig& config, const SimResult& result);

} // namespace migrasim
