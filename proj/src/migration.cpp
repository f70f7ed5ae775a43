#include "migrasim/migration.hpp"

#include <cmath>
#include <stdexcept>

namespace migrasim {

std::size_t WorkerRoster::urban_count() const {
    std::size_t count = 0;
    for (const Sector s : sector) {
        if (s == Sector::Urban) ++count;
    }
    return count;
}

void WorkerRoster::validate() const {
    if (sector.size() != hukou.size()) {
        throw std::invalid_argument("WorkerRoster: sector/hukou length mismatch");
    }
    for (std::size_t i = 0; i < sector.size(); ++i) {
        if (hukou[i] && sector[i] != Sector::Urban) {
            throw std::invalid_argument(
                "WorkerRoster: hukou holder outside the urban sector");
        }
    }
}

void MigrationParams::validate() const {
    if (!(beta > 0.0)) throw std::invalid_argument("beta: must be positive");
    if (!(review_period_days > 0.0)) {
        throw std::invalid_argument("review_period_days: must be positive");
    }
}

double migration_probability(double x_i, double beta) {
    if (!(beta > 0.0)) {
        throw std::invalid_argument("migration_probability: beta must be positive");
    }
    const double magnitude = std::abs(x_i);
    return magnitude / (magnitude + beta);
}

ReviewOutcome monthly_review(WorkerRoster& roster, const IntentionState& state,
                             const MigrationParams& params, RandomStream& rng) {
    const std::size_t n = roster.sector.size();
    if (state.x.size() != n) {
        throw std::invalid_argument("monthly_review: dimension mismatch");
    }
    ReviewOutcome outcome;
    for (std::size_t i = 0; i < n; ++i) {
        const bool urban = roster.sector[i] == Sector::Urban;
        const bool candidate = urban ? state.x[i] < 0.0 : state.x[i] > 0.0;
        if (!candidate) continue;
        // Hukou-blocked candidates still consume their draw so that
        // hukou-on/off runs at the same seed stay pathwise comparable.
        const double draw = rng.uniform01();
        if (urban && roster.hukou[i]) continue;
        if (draw < migration_probability(state.x[i], params.beta)) {
            roster.sector[i] = urban ? Sector::Rural : Sector::Urban;
            if (urban) {
                ++outcome.urban_outflow;
            } else {
                ++outcome.urban_inflow;
            }
        }
    }
    return outcome;
}

} // namespace migrasim
