#include <catch2/catch_amalgamated.hpp>
#include <hclass/series.hpp>

using namespace hclass;

TEST_CASE("qseries container semantics") {
    QSeries s{5, {}};
    s.set(0, Rational(1, 2));
    s.set(3, Rational(-2));
    REQUIRE(s.coeff(0) == Rational(1, 2));
    REQUIRE(s.coeff(3) == Rational(-2));
    REQUIRE(s.coeff(2) == Rational(0));
    s.set(3, Rational(0));
    REQUIRE(s.coefficients.count(3) == 0);
    REQUIRE_THROWS_AS(s.set(-1, Rational(1)), std::invalid_argument);
    REQUIRE_THROWS_AS(s.set(6, Rational(1)), std::invalid_argument);

    QSeries t{5, {}};
    t.set(0, Rational(4));
    t.set(1, Rational(6));
    s.add_scaled(t, Rational(1, 2));
    REQUIRE(s.coeff(0) == Rational(5, 2));
    REQUIRE(s.coeff(1) == Rational(3));
    s.scale(Rational(2));
    REQUIRE(s.coeff(0) == Rational(5));
}

TEST_CASE("generalized class numbers at anchored arguments") {
    REQUIRE(hurwitz_class_number(2, 1, 1, 0) == Rational(1, 120));
    REQUIRE(hurwitz_class_number(2, 1, 1, 4) == Rational(-7, 12));
    REQUIRE(hurwitz_class_number(2, 1, 1, 5) == Rational(-2, 5));
    REQUIRE(hurwitz_class_number(2, 3, 3, 4) == Rational(7, 6));
    REQUIRE(hurwitz_class_number(2, 1, 3, 4) == Rational(-21, 40));
    REQUIRE(hurwitz_class_number(3, 1, 1, 3) == Rational(-2, 9));
    // vanishing off the discriminant progression
    REQUIRE(hurwitz_class_number(2, 1, 1, 2) == Rational(0));
    REQUIRE(hurwitz_class_number(2, 1, 1, 3) == Rational(0));
    // constant term lives only on the full level piece
    REQUIRE(hurwitz_class_number(2, 1, 3, 0) == Rational(0));
    REQUIRE(hurwitz_class_number(2, 3, 3, 0) == Rational(-13, 60));
}

TEST_CASE("class number argument validation") {
    REQUIRE_THROWS_AS(hurwitz_class_number(1, 1, 1, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(hurwitz_class_number(2, 1, 2, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(hurwitz_class_number(2, 1, 9, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(hurwitz_class_number(2, 2, 3, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(hurwitz_class_number(2, 1, 1, -1), std::invalid_argument);
}

TEST_CASE("q-expansion matches pointwise class numbers") {
    auto s = cohen_eisenstein_series(2, 1, 3, 20);
    for (long long n = 0; n <= 20; ++n)
        REQUIRE(s.coeff(n) == hurwitz_class_number(2, 1, 3, n));
    REQUIRE_THROWS_AS(cohen_eisenstein_series(2, 1, 3, -1), std::invalid_argument);
}

TEST_CASE("weighted divisor combination") {
    auto combo = theorem_1_1_combination(2, 1, 10);
    REQUIRE(combo.coeff(0) == Rational(1));
    REQUIRE(combo.coeff(4) == Rational(-70));
    auto combo3 = theorem_1_1_combination(3, 1, 4);
    REQUIRE(combo3.coeff(0) == Rational(5, 3));
    REQUIRE_THROWS_AS(theorem_1_1_combination(2, 9, 4), std::invalid_argument);
}

TEST_CASE("scaled three-series combination") {
    auto [scalar, series] = theorem_1_2_rhs(2, 3, 4);
    REQUIRE(scalar.coefficient == Rational(-10));
    REQUIRE(scalar.sqrt_of == 3);
    REQUIRE(scalar.to_double() == Catch::Approx(-10.0 * std::sqrt(3.0)).epsilon(1e-15));
    REQUIRE(series.coeff(0) == Rational(1, 120));
    REQUIRE(series.coeff(4) == Rational(-7, 60));
    REQUIRE_THROWS_AS(theorem_1_2_rhs(3, 3, 4), std::invalid_argument);
    REQUIRE_THROWS_AS(theorem_1_2_rhs(2, 2, 4), std::invalid_argument);
    REQUIRE_THROWS_AS(theorem_1_2_rhs(2, 9, 4), std::invalid_argument);
}

TEST_CASE("holomorphic eisenstein coefficients") {
    // weight 4 and 6, level 1: 1 + 240 sigma_3, 1 - 504 sigma_5
    auto e4 = holomorphic_eisenstein_coefficients(2, 1, 6);
    REQUIRE(e4.coeff(0) == Rational(1));
    REQUIRE(e4.coeff(1) == Rational(240));
    REQUIRE(e4.coeff(2) == Rational(2160));
    REQUIRE(e4.coeff(6) == Rational(240) * Rational(1 + 8 + 27 + 216));
    auto e6 = holomorphic_eisenstein_coefficients(3, 1, 2);
    REQUIRE(e6.coeff(1) == Rational(-504));
    REQUIRE(e6.coeff(2) == Rational(-504 * 33));
    REQUIRE_THROWS_AS(holomorphic_eisenstein_coefficients(1, 1, 4), std::invalid_argument);
    REQUIRE_THROWS_AS(holomorphic_eisenstein_coefficients(2, 4, 4), std::invalid_argument);
}

TEST_CASE("symbolic fourier terms") {
    SymTerm t = SymTerm::from_rational(Rational(3, 2));
    t.im = Rational(-1);
    t.pi_pow = 2;
    auto z = t.to_complex();
    REQUIRE(z.real() == Catch::Approx(1.5 * kPi * kPi).epsilon(1e-15));
    REQUIRE(z.imag() == Catch::Approx(-kPi * kPi).epsilon(1e-15));
    REQUIRE(t.conjugated().im == Rational(1));
    REQUIRE(t.scaled(Rational(2)).re == Rational(3));
    REQUIRE(SymTerm::from_rational(Rational(0)).is_zero());
    SymTerm n = SymTerm::from_numeric({0.0, 2.0});
    REQUIRE(n.conjugated().numeric == std::complex<double>(0.0, -2.0));
    REQUIRE(!n.is_zero());
}

TEST_CASE("antiholomorphic differential coefficients") {
    HarmonicExpansion h;
    h.two_weight = 3;  // kappa = 3/2
    h.c_minus[0] = SymTerm::from_rational(Rational(2));
    h.c_minus[-5] = SymTerm::from_rational(Rational(1, 2));
    h.c_minus[-7] = SymTerm::from_rational(Rational(0));
    auto xi = xi_coefficients(h);
    REQUIRE(xi.size() == 2);
    // constant term: (1 - kappa) c(0)
    REQUIRE(xi.at(0).scalar.re == Rational(-1));
    REQUIRE(xi.at(0).pi_pow == Rational(0));
    // index 5: -(4 pi n)^(1-kappa) c(-5)
    REQUIRE(xi.at(5).scalar.re == Rational(-1, 2));
    REQUIRE(xi.at(5).pi_pow == Rational(-1, 2));
    REQUIRE(xi.at(5).n4_pow == Rational(-1, 2));
    double expect = -0.5 * std::pow(kPi, -0.5) * std::pow(20.0, -0.5);
    REQUIRE(xi.at(5).to_complex(5).real() == Catch::Approx(expect).epsilon(1e-14));
    // holomorphic input maps to nothing
    HarmonicExpansion holo;
    holo.two_weight = 3;
    holo.c_plus[1] = SymTerm::from_rational(Rational(1));
    REQUIRE(xi_coefficients(holo).empty());
}

TEST_CASE("iterated raising scalars") {
    auto [s1, e1] = raise_scalar(Rational(1, 2), Rational(1, 2), 1);
    REQUIRE(s1 == Rational(1));
    REQUIRE(e1 == Rational(-1, 2));
    auto [s2, e2] = raise_scalar(Rational(1, 2), Rational(1, 2), 2);
    REQUIRE(s2 == Rational(2));
    REQUIRE(e2 == Rational(-3, 2));
    REQUIRE_THROWS_AS(raise_scalar(Rational(1, 2), Rational(1, 2), 0), std::invalid_argument);
}
