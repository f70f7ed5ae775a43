#include "migrasim/engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace migrasim {

void ScenarioConfig::validate() const {
    effective_econ().validate();
    dynamics.validate();
    migration.validate();
    if (n_workers < 2) {
        throw std::invalid_argument("n_workers: must be at least 2");
    }
    if (!(weight_upper > 0.0)) {
        throw std::invalid_argument("weight_upper: must be positive");
    }
    if (sparse_factor < 0.0 || sparse_factor >= weight_upper) {
        throw std::invalid_argument(
            "sparse_factor: must lie in [0, weight_upper)");
    }
    if (!(initial_urban_fraction > 0.0 && initial_urban_fraction < 1.0)) {
        throw std::invalid_argument(
            "initial_urban_fraction: must lie in (0, 1)");
    }
    const auto urban0 = static_cast<std::size_t>(
        std::floor(initial_urban_fraction * static_cast<double>(n_workers)));
    if (urban0 == 0 || urban0 >= n_workers) {
        throw std::invalid_argument(
            "initial_urban_fraction: leaves a sector empty at this n_workers");
    }
    if (!(x0_magnitude >= 0.0)) {
        throw std::invalid_argument("x0_magnitude: must be nonnegative");
    }
    if (!(dt_days > 0.0)) {
        throw std::invalid_argument("dt_days: must be positive");
    }
    const double steps = migration.review_period_days / dt_days;
    if (std::abs(steps - std::round(steps)) > 1e-9) {
        throw std::invalid_argument(
            "dt_days: must divide review_period_days evenly");
    }
    if (!(blowup_bound > 0.0)) {
        throw std::invalid_argument("blowup_bound: must be positive");
    }
    if (!(zero_tol > 0.0)) {
        throw std::invalid_argument("zero_tol: must be positive");
    }
}

EconParams ScenarioConfig::effective_econ() const {
    EconParams e = econ;
    e.N_total = static_cast<double>(n_workers);
    return e;
}

InitialState initialize(const ScenarioConfig& config, RandomStream& rng) {
    config.validate();
    const std::size_t n = config.n_workers;
    SocialGraph graph =
        random_graph(n, config.weight_upper, config.sparse_factor, rng);
    graph.generation_seed = config.seed;

    const auto urban0 = static_cast<std::size_t>(std::floor(
        config.initial_urban_fraction * static_cast<double>(n)));

    WorkerRoster roster;
    roster.sector.assign(n, Sector::Rural);
    roster.hukou.assign(n, false);
    for (std::size_t i = 0; i < urban0; ++i) {
        roster.sector[i] = Sector::Urban;
        if (config.hukou_initial_urban) roster.hukou[i] = true;
    }

    IntentionState intentions;
    intentions.x.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        intentions.x[i] = roster.sector[i] == Sector::Urban
                              ? config.x0_magnitude
                              : -config.x0_magnitude;
    }
    return InitialState{std::move(graph), std::move(roster),
                        std::move(intentions)};
}

SimResult run(const ScenarioConfig& config) {
    config.validate();
    RandomStream rng(config.seed);
    InitialState init = initialize(config, rng);
    const SocialGraph& graph = init.graph;
    WorkerRoster& roster = init.roster;
    IntentionState& state = init.intentions;
    const EconParams econ = config.effective_econ();
    const EconDerived derived = derive_constants(econ);

    SimResult result;
    result.verdict = predict_consensus(graph, config.dynamics, config.zero_tol);
    result.series.reserve(config.horizon_months + 1);

    const auto steps_per_month = static_cast<std::size_t>(
        std::round(config.migration.review_period_days / config.dt_days));

    std::size_t n_urban = roster.urban_count();
    {
        const double v0 = expected_wage_differential(
            derived, econ, static_cast<double>(n_urban));
        result.series.push_back(MonthRecord{0.0, n_urban, v0,
                                            config.dynamics.input_gain * v0,
                                            intention_spread(state), 0, 0});
    }

    for (std::size_t month = 1; month <= config.horizon_months; ++month) {
        const double v = expected_wage_differential(
            derived, econ, static_cast<double>(n_urban));
        for (std::size_t s = 0; s < steps_per_month; ++s) {
            const bool ok = step(state, graph, config.dynamics, v,
                                 config.dt_days, config.blowup_bound);
            if (!ok) {
                result.diverged = true;
                if (!config.clamp_on_divergence) return result;
                for (double& xi : state.x) {
                    xi = std::clamp(xi, -config.blowup_bound,
                                    config.blowup_bound);
                }
            }
        }
        const ReviewOutcome outcome =
            monthly_review(roster, state, config.migration, rng);
        n_urban = roster.urban_count();
        result.series.push_back(MonthRecord{
            state.t, n_urban, v, config.dynamics.input_gain * v,
            intention_spread(state), outcome.urban_inflow,
            outcome.urban_outflow});
        if (n_urban == 0 || n_urban == config.n_workers) {
            result.status = RunStatus::SectorCollapse;
            break;
        }
    }

    if (!result.diverged) {
        result.summary.overshoot_ratio = overshoot_ratio(result.series);
    }
    result.summary.oscillation_amplitude =
        oscillation_amplitude(result.series);
    return result;
}

double overshoot_ratio(const std::vector<MonthRecord>& series) {
    if (series.empty()) {
        throw std::invalid_argument("overshoot_ratio: empty series");
    }
    const double initial = static_cast<double>(series.front().n_urban);
    const double final_value = static_cast<double>(series.back().n_urban);
    const double initial_side = initial - final_value;

    // First sample at or beyond the final value, approached from the
    // initial side.
    std::size_t crossing = series.size();
    for (std::size_t k = 0; k < series.size(); ++k) {
        const double delta = static_cast<double>(series[k].n_urban) - final_value;
        if (delta == 0.0 || (delta > 0.0) != (initial_side > 0.0)) {
            crossing = k;
            break;
        }
    }
    double excess = 0.0;
    for (std::size_t k = crossing; k < series.size(); ++k) {
        excess = std::max(excess,
                          static_cast<double>(series[k].n_urban) - final_value);
    }
    return excess / std::max(1.0, std::abs(final_value - initial));
}

double oscillation_amplitude(const std::vector<MonthRecord>& series,
                             double window_fraction) {
    if (!(window_fraction > 0.0 && window_fraction <= 1.0)) {
        throw std::invalid_argument(
            "oscillation_amplitude: window_fraction must lie in (0, 1]");
    }
    if (series.empty()) return 0.0;
    const auto window = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil(
               window_fraction * static_cast<double>(series.size()))));
    std::size_t lo = series[series.size() - window].n_urban;
    std::size_t hi = lo;
    for (std::size_t k = series.size() - window; k < series.size(); ++k) {
        lo = std::min(lo, series[k].n_urban);
        hi = std::max(hi, series[k].n_urban);
    }
    return static_cast<double>(hi - lo);
}

} // namespace migrasim
