#include <catch2/catch_amalgamated.hpp>
#include <hclass/rational.hpp>

using namespace hclass;

TEST_CASE("rational reduction and normalization") {
    REQUIRE(Rational(6, 8) == Rational(3, 4));
    REQUIRE(Rational(-6, 8) == Rational(-3, 4));
    REQUIRE(Rational(6, -8) == Rational(-3, 4));
    REQUIRE(Rational(-6, -8) == Rational(3, 4));
    REQUIRE(Rational(0, 7) == Rational(0));
    REQUIRE(Rational(0, -7).den() == 1);
    REQUIRE(Rational(21, 7).num() == 3);
    REQUIRE(Rational(21, 7).den() == 1);
}

TEST_CASE("rational arithmetic") {
    REQUIRE(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    REQUIRE(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    REQUIRE(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    REQUIRE(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    REQUIRE(-Rational(5, 7) == Rational(-5, 7));
    REQUIRE(Rational(1, 3) < Rational(1, 2));
    REQUIRE(Rational(-1, 2) < Rational(-1, 3));
}

TEST_CASE("rational powers") {
    REQUIRE(Rational(2, 3).pow(3) == Rational(8, 27));
    REQUIRE(Rational(2, 3).pow(0) == Rational(1));
    REQUIRE(Rational(2, 3).pow(-2) == Rational(9, 4));
    REQUIRE(int_pow(2, 10) == Rational(1024));
    REQUIRE(int_pow(2, -3) == Rational(1, 8));
    REQUIRE(int_pow(-3, 3) == Rational(-27));
}

TEST_CASE("rational formatting and conversion") {
    REQUIRE(Rational(-7, 12).to_string() == "-7/12");
    REQUIRE(Rational(5).to_string() == "5");
    REQUIRE(Rational(1, 2).to_double() == 0.5);
    REQUIRE(Rational(-1, 4).to_double() == -0.25);
}

TEST_CASE("rational error conditions") {
    REQUIRE_THROWS_AS(Rational(1, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(Rational(1, 2) / Rational(0), std::invalid_argument);
    REQUIRE_THROWS_AS(Rational(0).pow(-1), std::invalid_argument);
}

TEST_CASE("pi-rational arithmetic tracks the pi exponent") {
    PiRational a(Rational(1, 6), 2);
    REQUIRE(a.coefficient() == Rational(1, 6));
    REQUIRE(a.pi_exponent() == 2);
    PiRational b = a * PiRational(Rational(3), 2);
    REQUIRE(b.coefficient() == Rational(1, 2));
    REQUIRE(b.pi_exponent() == 4);
    PiRational c = a + PiRational(Rational(1, 3), 2);
    REQUIRE(c.coefficient() == Rational(1, 2));
    REQUIRE(c.pi_exponent() == 2);
    REQUIRE_THROWS_AS(a + PiRational(Rational(1), 3), std::invalid_argument);
    REQUIRE(a.to_string() == "(1/6)*pi^2");
    REQUIRE(PiRational(Rational(90), -4).to_string() == "(90)*pi^-4");
    REQUIRE(std::abs(a.to_double() - 1.6449340668482264) < 1e-15);
}
