#include "migrasim/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace migrasim {

void DynamicsParams::validate() const {
    if (f < 0.0) throw std::invalid_argument("f: must be nonnegative");
    if (input_gain < 0.0)
        throw std::invalid_argument("input_gain: must be nonnegative");
}

namespace {

inline double row_term(std::span<const double> x, const SocialGraph& g,
                       const DynamicsParams& p, double forcing, std::size_t i) {
    const std::size_t n = g.order();
    const double* w = g.data().data() + i * n;
    const double xi = x[i];
    double social = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        social += w[j] * (x[j] - xi);
    }
    return p.a * xi + p.f * social + forcing;
}

} // namespace

void rhs_serial(std::span<const double> x, const SocialGraph& g,
                const DynamicsParams& params, double v, std::span<double> out) {
    const std::size_t n = g.order();
    if (x.size() != n || out.size() != n) {
        throw std::invalid_argument("rhs: dimension mismatch");
    }
    const double forcing = params.input_gain * v;
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = row_term(x, g, params, forcing, i);
    }
}

void rhs_parallel(std::span<const double> x, const SocialGraph& g,
                  const DynamicsParams& params, double v, std::span<double> out) {
    const std::size_t n = g.order();
    if (x.size() != n || out.size() != n) {
        throw std::invalid_argument("rhs: dimension mismatch");
    }
    const double forcing = params.input_gain * v;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
        out[static_cast<std::size_t>(i)] =
            row_term(x, g, params, forcing, static_cast<std::size_t>(i));
    }
}

bool step(IntentionState& state, const SocialGraph& g,
          const DynamicsParams& params, double v, double dt,
          double blowup_bound, bool parallel) {
    if (!(dt > 0.0)) throw std::invalid_argument("step: dt must be positive");
    const std::size_t n = g.order();
    if (state.x.size() != n) {
        throw std::invalid_argument("step: state dimension mismatch");
    }
    const auto eval = parallel ? rhs_parallel : rhs_serial;

    std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);
    eval(state.x, g, params, v, k1);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = state.x[i] + 0.5 * dt * k1[i];
    eval(tmp, g, params, v, k2);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = state.x[i] + 0.5 * dt * k2[i];
    eval(tmp, g, params, v, k3);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = state.x[i] + dt * k3[i];
    eval(tmp, g, params, v, k4);

    bool within_bounds = true;
    for (std::size_t i = 0; i < n; ++i) {
        state.x[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        if (!(std::abs(state.x[i]) <= blowup_bound)) within_bounds = false;
    }
    state.t += dt;
    return within_bounds;
}

ConsensusVerdict predict_consensus(const SocialGraph& g,
                                   const DynamicsParams& params,
                                   double zero_tol) {
    ConsensusVerdict verdict;
    verdict.has_spanning_tree = has_spanning_tree(g);
    const Spectrum s = spectrum(laplacian(g), g.order(), zero_tol);
    verdict.lambda2_re = s.lambda2_re;
    verdict.consensus_predicted =
        verdict.has_spanning_tree && params.a < params.f * s.lambda2_re;
    return verdict;
}

double intention_spread(const IntentionState& state) {
    if (state.x.empty()) return 0.0;
    const auto [lo, hi] = std::minmax_element(state.x.begin(), state.x.end());
    return *hi - *lo;
}

} // namespace migrasim
