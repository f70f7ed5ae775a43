#pragma once

#include <span>
#include <vector>

#include "migrasim/graph.hpp"
#include "migrasim/spectrum.hpp"

namespace migrasim {

struct DynamicsParams {
    double a = 0.0008;        // inertia coefficient, 1/day
    double f = 0.001;         // social-influence gain, 1/day
    double input_gain = 0.02; // coefficient on the wage differential, 1/day

    void validate() const; // f >= 0, input_gain >= 0; a unrestricted
};

/// Migration intentions of all workers at simulation time t (days).
/// x[i] > 0 means worker i leans urban, x[i] < 0 rural.
struct IntentionState {
    std::vector<double> x;
    double t = 0.0;
};

struct ConsensusVerdict {
    bool has_spanning_tree = false;
    double lambda2_re = 0.0;
    bool consensus_predicted = false;
};

inline constexpr double kDefaultBlowupBound = 1e12;

/// dx_i/dt = a x_i + f sum_j w_ij (x_j - x_i) + input_gain * v.
/// Serial reference kernel; row sums accumulate in ascending j order.
void rhs_serial(std::span<const double> x, const SocialGraph& g,
                const DynamicsParams& params, double v, std::span<double> out);

/// OpenMP kernel, parallel over rows. Bit-identical to rhs_serial: each
/// row is an independent fixed-order accumulation.
void rhs_parallel(std::span<const double> x, const SocialGraph& g,
                  const DynamicsParams& params, double v, std::span<double> out);

/// One classical RK4 step with v held constant. Advances state in place.
/// Returns false if any |x_i| exceeds blowup_bound afterwards (the state
/// is left as computed; the caller decides whether to clamp or halt).
bool step(IntentionState& state, const SocialGraph& g,
          const DynamicsParams& params, double v, double dt,
          double blowup_bound = kDefaultBlowupBound, bool parallel = true);

/// Consensus verdict from the Laplacian spectrum: consensus iff the graph
/// has a spanning tree and a < f * Re(lambda_2), strict. The identical
/// input term does not enter the verdict.
ConsensusVerdict predict_consensus(const SocialGraph& g,
                                   const DynamicsParams& params,
                                   double zero_tol = kDefaultZeroTol);

/// max_i x_i - min_i x_i.
double intention_spread(const IntentionState& state);

} // namespace migrasim
