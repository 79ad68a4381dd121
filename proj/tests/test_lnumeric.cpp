#include <catch2/catch_amalgamated.hpp>
#include <hclass/lnumeric.hpp>

#include <cmath>

using namespace hclass;

TEST_CASE("riemann zeta numerically") {
    REQUIRE(zeta_numeric(2.0) == Catch::Approx(1.6449340668482264).epsilon(1e-13));
    REQUIRE(zeta_numeric(3.0) == Catch::Approx(1.2020569031595943).epsilon(1e-13));
    REQUIRE(zeta_numeric(4.0) == Catch::Approx(1.0823232337111382).epsilon(1e-13));
    REQUIRE(zeta_numeric(1.5) == Catch::Approx(2.6123753486854883).epsilon(1e-12));
    REQUIRE_THROWS_AS(zeta_numeric(1.0), std::invalid_argument);
}

TEST_CASE("hurwitz zeta domain and values") {
    // zeta(s, 1/2) = (2^s - 1) zeta(s)
    REQUIRE(hurwitz_zeta(2.0, 0.5) ==
            Catch::Approx(3.0 * 1.6449340668482264).epsilon(1e-13));
    REQUIRE_THROWS_AS(hurwitz_zeta(2.0, 0.0), std::invalid_argument);
    REQUIRE_THROWS_AS(hurwitz_zeta(2.0, 1.5), std::invalid_argument);
}

TEST_CASE("dirichlet L numerically") {
    // Catalan-free anchor: L(2, chi_-4) is Catalan's constant
    REQUIRE(dirichlet_L_numeric(2.0, -4, 1e-14) ==
            Catch::Approx(0.9159655941772190).epsilon(1e-12));
    // agreement between numeric L and the exact even-zeta constant
    REQUIRE(dirichlet_L_numeric(4.0, 1, 1e-14) ==
            Catch::Approx(zeta_even_positive(4).to_double()).epsilon(1e-13));
    REQUIRE_THROWS_AS(dirichlet_L_numeric(2.0, 12345, 1e-14), std::invalid_argument);
    REQUIRE_THROWS_AS(dirichlet_L_numeric(2.0, 1, 0.0), std::invalid_argument);
}

TEST_CASE("incomplete L strips Euler factors numerically") {
    double full = zeta_numeric(2.0);
    REQUIRE(incomplete_L_numeric(2.0, 1, 2, 1e-14) ==
            Catch::Approx(full * (1.0 - 0.25)).epsilon(1e-13));
    REQUIRE(incomplete_L_numeric(2.0, 1, 12, 1e-14) ==
            Catch::Approx(full * 0.75 * (1.0 - 1.0 / 9.0)).epsilon(1e-13));
}

TEST_CASE("exact gamma ratio") {
    REQUIRE(sqrt_pi_gamma_ratio(1) == Rational(2));
    REQUIRE(sqrt_pi_gamma_ratio(2) == Rational(4, 3));
    REQUIRE(sqrt_pi_gamma_ratio(3) == Rational(16, 15));
    // against the analytic definition sqrt(pi) Gamma(k) / Gamma(k + 1/2)
    for (unsigned k = 1; k <= 6; ++k) {
        double expect = std::sqrt(M_PI) * std::tgamma(double(k)) / std::tgamma(k + 0.5);
        REQUIRE(sqrt_pi_gamma_ratio(k).to_double() == Catch::Approx(expect).epsilon(1e-14));
    }
    REQUIRE_THROWS_AS(sqrt_pi_gamma_ratio(0), std::invalid_argument);
}

TEST_CASE("upper incomplete gamma") {
    // frozen references, both series and continued-fraction branches
    REQUIRE(incomplete_gamma_upper(0.5, 1.0) ==
            Catch::Approx(0.2788055852806619765).epsilon(1e-13));
    REQUIRE(incomplete_gamma_upper(1.5, 2.0) ==
            Catch::Approx(0.23171655200098069332).epsilon(1e-13));
    REQUIRE(incomplete_gamma_upper(0.5, 0.25) ==
            Catch::Approx(0.84989183807993112979).epsilon(1e-13));
    REQUIRE(incomplete_gamma_upper(2.5, 1.5) ==
            Catch::Approx(0.93051944278679239087).epsilon(1e-13));
    // Gamma(1, x) = exp(-x)
    for (double x : {0.3, 1.0, 2.5, 7.0})
        REQUIRE(incomplete_gamma_upper(1.0, x) == Catch::Approx(std::exp(-x)).epsilon(1e-13));
    // recurrence Gamma(s+1, x) = s Gamma(s, x) + x^s exp(-x)
    for (double x : {0.5, 1.0, 3.0, 6.0}) {
        double s = 1.5;
        double lhs = incomplete_gamma_upper(s + 1.0, x);
        double rhs = s * incomplete_gamma_upper(s, x) + std::pow(x, s) * std::exp(-x);
        REQUIRE(lhs == Catch::Approx(rhs).epsilon(1e-12));
    }
    REQUIRE_THROWS_AS(incomplete_gamma_upper(0.5, 0.0), std::invalid_argument);
    REQUIRE_THROWS_AS(incomplete_gamma_upper(0.5, -1.0), std::invalid_argument);
}
