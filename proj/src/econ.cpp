#include "migrasim/econ.hpp"

#include <cmath>
#include <string>

namespace migrasim {

namespace {

void require(bool cond, const char* field, const char* what) {
    if (!cond) {
        throw std::invalid_argument(std::string(field) + ": " + what);
    }
}

} // namespace

void EconParams::validate() const {
    require(alpha > 0.0 && alpha < 1.0, "alpha", "must lie in (0, 1)");
    require(phi > 0.0 && phi < 1.0, "phi", "must lie in (0, 1)");
    require(eta > 0.0 && eta < 1.0, "eta", "must lie in (0, 1)");
    require(econ_b > 0.0, "econ_b", "must be positive");
    require(A_m > 0.0, "A_m", "must be positive");
    require(A_a > 0.0, "A_a", "must be positive");
    require(Z_m > 0.0, "Z_m", "must be positive");
    require(Z_a > 0.0, "Z_a", "must be positive");
    require(rho > 0.0, "rho", "must be positive");
    require(gamma > 0.0, "gamma", "must be positive");
    require(N_total >= 2.0, "N_total", "must be at least 2");
    require(r_u >= 0.0 && r_u < 1.0, "r_u", "must lie in [0, 1)");
    require(1.0 - eta / econ_b > 0.0, "econ_b",
            "requires 1 - eta/econ_b > 0");
}

EconDerived derive_constants(const EconParams& p) {
    p.validate();
    const double share = p.eta / (1.0 - p.eta);
    const double slack = 1.0 - p.eta / p.econ_b;
    EconDerived d;
    d.xi1 = p.A_m * std::pow(p.Z_m, 1.0 - p.alpha) *
            std::pow(std::pow(share, p.eta) * slack, p.alpha);
    d.xi2 = p.alpha * p.A_m * std::pow(share, p.alpha * p.eta) *
            std::pow(slack / p.Z_m, p.alpha - 1.0);
    d.xi3 = p.A_a * std::pow(p.Z_a, 1.0 - p.phi);
    d.xi4 = p.A_a * p.phi / std::pow(p.Z_a, p.phi - 1.0);
    return d;
}

double manufacturing_wage(const EconDerived& d, const EconParams& p, double n_u) {
    if (!(n_u > 0.0)) {
        throw std::domain_error("manufacturing_wage: urban sector empty (n_u <= 0)");
    }
    return d.xi2 * std::pow(n_u, p.alpha - 1.0);
}

double agricultural_income(const EconDerived& d, const EconParams& p,
                           double price, double n_u) {
    const double rural = p.N_total - n_u;
    if (!(rural > 0.0)) {
        throw std::domain_error("agricultural_income: rural sector empty (n_u >= N_total)");
    }
    return d.xi4 * price * std::pow(rural, p.phi - 1.0);
}

double relative_price(const EconDerived& d, const EconParams& p, double n_u) {
    if (!(n_u > 0.0) || !(n_u < p.N_total)) {
        throw std::domain_error("relative_price: one sector is empty");
    }
    const double y_m = d.xi1 * std::pow(n_u, p.alpha);
    const double y_a = d.xi3 * std::pow(p.N_total - n_u, p.phi);
    return p.rho * std::pow(y_m / y_a, p.gamma);
}

double expected_wage_differential(const EconDerived& d, const EconParams& p,
                                  double n_u) {
    const double w_m = manufacturing_wage(d, p, n_u);
    const double price = relative_price(d, p, n_u);
    const double w_a = agricultural_income(d, p, price, n_u);
    return (1.0 - p.r_u) * w_m - w_a;
}

} // namespace migrasim
