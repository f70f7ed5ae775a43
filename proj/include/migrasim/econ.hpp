#pragma once

#include <stdexcept>

namespace migrasim {

/// Parameters of the dual-sector economy: urban manufacturing firms and
/// rural farms. All values are exogenous constants for a run.
struct EconParams {
    double alpha = 0.6;   // manufacturing returns exponent, 0 < alpha < 1
    double phi = 0.6;     // agricultural returns exponent, 0 < phi < 1
    double eta = 0.5;     // share parameter, 0 < eta < 1
    double econ_b = 1.0;  // enters the xi constants as (1 - eta/econ_b)
    double A_m = 0.1;     // manufacturing productivity scale
    double A_a = 0.005;   // agricultural productivity scale
    double Z_m = 30.0;    // number of firms
    double Z_a = 80.0;    // number of farms
    double rho = 1.0;     // price scale
    double gamma = 1.0;   // price elasticity
    double N_total = 100.0; // total population of the society
    double r_u = 0.10;    // urban unemployment rate, in [0, 1)

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
};

/// The four closed-form constants precomputed from EconParams.
struct EconDerived {
    double xi1; // production scale, manufacturing
    double xi2; // wage scale, manufacturing
    double xi3; // production scale, agriculture
    double xi4; // income scale, agriculture
};

/// Pure function of params; identical inputs give bit-identical output.
EconDerived derive_constants(const EconParams& params);

/// Average manufacturing wage at urban population n_u: xi2 * n_u^(alpha-1).
double manufacturing_wage(const EconDerived& d, const EconParams& p, double n_u);

/// Average rural income at urban population n_u: xi4 * p * (N - n_u)^(phi-1).
double agricultural_income(const EconDerived& d, const EconParams& p,
                           double price, double n_u);

/// Relative price of agricultural goods, rho * (Y_m / Y_a)^gamma.
double relative_price(const EconDerived& d, const EconParams& p, double n_u);

/// Expected wage differential v = (1 - r_u) * w_m - w_a. May be negative.
double expected_wage_differential(const EconDerived& d, const EconParams& p,
                                  double n_u);

} // namespace migrasim
