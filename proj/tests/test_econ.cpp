#include <doctest.h>

#include <cmath>

#include "migrasim/econ.hpp"

using namespace migrasim;

namespace {

EconParams defaults() { return EconParams{}; }

// Custom params where the closed forms collapse to hand arithmetic.
EconParams unit_params() {
    EconParams p;
    p.alpha = 0.5;
    p.phi = 0.5;
    p.eta = 0.5;
    p.econ_b = 1.0;
    p.A_m = 1.0;
    p.A_a = 1.0;
    p.Z_m = 1.0;
    p.Z_a = 1.0;
    return p;
}

} // namespace

TEST_CASE("derived constants at collapsing parameter values") {
    const EconParams p = unit_params();
    const EconDerived d = derive_constants(p);
    // 1 - eta/b = 0.5 and eta/(1-eta) = 1, so xi1 = xi2 = 0.5^0.5
    CHECK(d.xi1 == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
    CHECK(d.xi2 == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
    CHECK(d.xi3 == doctest::Approx(1.0));
    CHECK(d.xi4 == doctest::Approx(0.5));
}

TEST_CASE("derived constants at shipped defaults match high-precision values") {
    // Frozen from a 40-digit evaluation of the four closed forms.
    const EconDerived d = derive_constants(defaults());
    CHECK(d.xi1 == doctest::Approx(0.25717603983775207).epsilon(1e-14));
    CHECK(d.xi2 == doctest::Approx(0.30861124780530248).epsilon(1e-14));
    CHECK(d.xi3 == doctest::Approx(0.028853998118144271).epsilon(1e-14));
    CHECK(d.xi4 == doctest::Approx(0.017312398870886563).epsilon(1e-14));
}

TEST_CASE("derive_constants is a pure function") {
    const EconParams p = defaults();
    const EconDerived d1 = derive_constants(p);
    const EconDerived d2 = derive_constants(p);
    CHECK(d1.xi1 == d2.xi1);
    CHECK(d1.xi2 == d2.xi2);
    CHECK(d1.xi3 == d2.xi3);
    CHECK(d1.xi4 == d2.xi4);
}

TEST_CASE("manufacturing wage") {
    EconParams p = unit_params();
    EconDerived d = derive_constants(p);
    d.xi2 = 1.0;
    CHECK(manufacturing_wage(d, p, 100.0) == doctest::Approx(0.1));
    CHECK(manufacturing_wage(d, p, 1.0) == doctest::Approx(1.0));
    d.xi2 = 0.70711;
    CHECK(manufacturing_wage(d, p, 20.0) ==
          doctest::Approx(0.15811460275698763).epsilon(1e-10));
    CHECK_THROWS_AS(manufacturing_wage(d, p, 0.0), std::domain_error);
    CHECK_THROWS_AS(manufacturing_wage(d, p, -1.0), std::domain_error);
}

TEST_CASE("manufacturing wage at defaults (frozen oracle value)") {
    const EconParams p = defaults();
    const EconDerived d = derive_constants(p);
    CHECK(manufacturing_wage(d, p, 20.0) ==
          doctest::Approx(0.09311073443492158).epsilon(1e-13));
}

TEST_CASE("agricultural income") {
    EconParams p = unit_params();
    EconDerived d = derive_constants(p);
    SUBCASE("unit scales") {
        d.xi4 = 1.0;
        p.N_total = 101.0;
        CHECK(agricultural_income(d, p, 1.0, 1.0) == doctest::Approx(0.1));
    }
    SUBCASE("tiny society") {
        d.xi4 = 0.5;
        p.N_total = 2.0;
        CHECK(agricultural_income(d, p, 2.0, 1.0) == doctest::Approx(1.0));
    }
    SUBCASE("empty rural sector") {
        p.N_total = 10.0;
        CHECK_THROWS_AS(agricultural_income(d, p, 1.0, 10.0), std::domain_error);
    }
    SUBCASE("defaults, frozen oracle value") {
        const EconParams dp = defaults();
        const EconDerived dd = derive_constants(dp);
        const double price = relative_price(dd, dp, 20.0);
        CHECK(price == doctest::Approx(3.8796139347883992).epsilon(1e-13));
        CHECK(agricultural_income(dd, dp, price, 20.0) ==
              doctest::Approx(0.011638841804365198).epsilon(1e-13));
    }
}

TEST_CASE("relative price") {
    EconParams p = unit_params();
    EconDerived d = derive_constants(p);
    d.xi1 = 1.0;
    d.xi3 = 1.0;
    SUBCASE("symmetry gives unit price") {
        p.N_total = 100.0;
        p.rho = 1.0;
        p.gamma = 1.0;
        CHECK(relative_price(d, p, 50.0) == doctest::Approx(1.0));
    }
    SUBCASE("hand-checkable power") {
        p.N_total = 125.0;
        p.gamma = 2.0;
        CHECK(relative_price(d, p, 100.0) == doctest::Approx(4.0).epsilon(1e-12));
    }
    SUBCASE("empty sector") {
        p.N_total = 10.0;
        CHECK_THROWS_AS(relative_price(d, p, 0.0), std::domain_error);
        CHECK_THROWS_AS(relative_price(d, p, 10.0), std::domain_error);
    }
}

TEST_CASE("gamma must be positive") {
    EconParams p = defaults();
    p.gamma = 0.0;
    CHECK_THROWS_WITH_AS(derive_constants(p), "gamma: must be positive",
                         std::invalid_argument);
}

TEST_CASE("expected wage differential") {
    SUBCASE("constructed cancellation") {
        // Pick parameters so w_m = 2 and w_a = 1 exactly at n_u = 50:
        // alpha -> 1 is disallowed, so use n_u = 1 where powers vanish.
        EconParams p = unit_params();
        p.N_total = 2.0;
        EconDerived d = derive_constants(p);
        d.xi2 = 2.0; // w_m(1) = 2
        d.xi1 = 1.0;
        d.xi3 = 1.0;
        p.rho = 1.0;
        p.gamma = 1.0;
        d.xi4 = 1.0; // price(1) = 1, w_a(1) = 1
        p.r_u = 0.0;
        CHECK(expected_wage_differential(d, p, 1.0) == doctest::Approx(1.0));
        p.r_u = 0.5;
        CHECK(expected_wage_differential(d, p, 1.0) == doctest::Approx(0.0));
    }
    SUBCASE("defaults at 20% urbanization: frozen value, urban pull") {
        const EconParams p = defaults();
        const EconDerived d = derive_constants(p);
        const double v = expected_wage_differential(d, p, 20.0);
        CHECK(v == doctest::Approx(0.07216081918706422).epsilon(1e-13));
        CHECK(v > 0.0);
    }
}

TEST_CASE("monotonicity of sector returns in population") {
    const EconParams p = defaults();
    const EconDerived d = derive_constants(p);
    double prev_wage = manufacturing_wage(d, p, 1.0);
    for (double n_u = 2.0; n_u < p.N_total; n_u += 1.0) {
        const double wage = manufacturing_wage(d, p, n_u);
        CHECK(wage < prev_wage);
        prev_wage = wage;
    }
    // marginal agricultural product falls as the rural sector grows
    double prev_marginal = std::pow(p.N_total - 99.0, p.phi - 1.0);
    for (double n_u = 98.0; n_u > 0.0; n_u -= 1.0) {
        const double marginal = std::pow(p.N_total - n_u, p.phi - 1.0);
        CHECK(marginal < prev_marginal);
        prev_marginal = marginal;
    }
}

TEST_CASE("homogeneity in productivity scales") {
    EconParams p = defaults();
    const EconDerived base = derive_constants(p);
    p.A_m *= 2.0;
    const EconDerived dm = derive_constants(p);
    CHECK(dm.xi1 == doctest::Approx(2.0 * base.xi1).epsilon(1e-14));
    p = defaults();
    p.A_a *= 2.0;
    const EconDerived da = derive_constants(p);
    CHECK(da.xi3 == doctest::Approx(2.0 * base.xi3).epsilon(1e-14));
}

TEST_CASE("wage differential is smooth on a dense grid") {
    const EconParams p = defaults();
    const EconDerived d = derive_constants(p);
    const double h = 0.01;
    double prev = expected_wage_differential(d, p, 1.0);
    for (double n_u = 1.0 + h; n_u <= 99.0; n_u += h) {
        const double cur = expected_wage_differential(d, p, n_u);
        // steepest near the rural-depletion end, still far below a jump
        CHECK(std::abs(cur - prev) < 0.05);
        prev = cur;
    }
}
