#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "migrasim/econ.hpp"
#include "migrasim/graph.hpp"
#include "migrasim/migration.hpp"

namespace migrasim {

/// Complete, seed-included specification of one simulation run.
struct ScenarioConfig {
    EconParams econ;
    DynamicsParams dynamics;
    MigrationParams migration;

    std::size_t n_workers = 100;
    double sparse_factor = 0.09;
    double weight_upper = 0.1;
    double initial_urban_fraction = 0.20;
    bool hukou_initial_urban = false;
    double x0_magnitude = 1.0;
    std::size_t horizon_months = 90;
    double dt_days = 0.25;
    std::uint64_t seed = 1;

    double blowup_bound = kDefaultBlowupBound;
    bool clamp_on_divergence = true;
    double zero_tol = kDefaultZeroTol;

    void validate() const;

    /// Economic parameters with N_total pinned to n_workers.
    EconParams effective_econ() const;
};

enum class RunStatus { Ok, SectorCollapse };

struct MonthRecord {
    double t_days;
    std::size_t n_urban;
    double v;       // wage differential in force during the month
    double bv;      // input term input_gain * v
    double spread;  // intention spread after the month's integration
    std::size_t urban_inflow;
    std::size_t urban_outflow;
};

struct SimSummary {
    std::optional<double> overshoot_ratio; // absent on diverged runs
    double oscillation_amplitude = 0.0;    // trailing-quarter max - min of N_u
};

struct SimResult {
    std::vector<MonthRecord> series; // horizon + 1 entries when run completes
    ConsensusVerdict verdict;
    bool diverged = false;
    RunStatus status = RunStatus::Ok;
    SimSummary summary;
};

/// Deterministic initial state: graph from the seeded stream, the
/// floor(initial_urban_fraction * n) lowest-index workers urban, intentions
/// +/- x0_magnitude aligned with the initial sector.
struct InitialState {
    SocialGraph graph;
    WorkerRoster roster;
    IntentionState intentions;
};
InitialState initialize(const ScenarioConfig& config, RandomStream& rng);

/// Full scenario: monthly loop of (compute v, integrate, review, record).
SimResult run(const ScenarioConfig& config);

/// Transient excursion of N_u beyond its final value, relative to the net
/// shift, measured after the trajectory first reaches the final value.
double overshoot_ratio(const std::vector<MonthRecord>& series);

/// max - min of N_u over the trailing window_fraction of the series.
double oscillation_amplitude(const std::vector<MonthRecord>& series,
                             double window_fraction = 0.25);

} // namespace migrasim
