#pragma once

#include <cstddef>
#include <vector>

#include "migrasim/dynamics.hpp"
#include "migrasim/rng.hpp"

namespace migrasim {

enum class Sector : unsigned char { Urban, Rural };

/// Per-worker sector assignment plus the hukou flag. Hukou holders are
/// urban residents who never migrate to the rural sector.
struct WorkerRoster {
    std::vector<Sector> sector;
    std::vector<bool> hukou;

    std::size_t urban_count() const;
    void validate() const; // equal lengths, hukou implies Urban at setup
};

struct MigrationParams {
    double beta = 3.0;               // sensitivity of the migration draw
    double review_period_days = 30.0;

    void validate() const;
};

struct ReviewOutcome {
    std::size_t urban_inflow = 0;  // rural -> urban moves
    std::size_t urban_outflow = 0; // urban -> rural moves
};

/// P = |x| / (|x| + beta); 0 at x = 0, approaches 1 as |x| grows.
double migration_probability(double x_i, double beta);

/// Monthly review: worker i is a candidate iff the sign of x[i] points to
/// the other sector. Every candidate consumes exactly one uniform draw in
/// ascending worker order; hukou-held urban candidates consume theirs and
/// then stay put. Intentions are not modified.
ReviewOutcome monthly_review(WorkerRoster& roster, const IntentionState& state,
                             const MigrationParams& params, RandomStream& rng);

} // namespace migrasim
