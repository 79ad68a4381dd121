#include <catch2/catch_amalgamated.hpp>
#include <hclass/arith.hpp>

using namespace hclass;

TEST_CASE("kronecker symbol fixed values") {
    REQUIRE(kronecker_symbol(1, 1) == 1);
    REQUIRE(kronecker_symbol(2, 7) == 1);
    REQUIRE(kronecker_symbol(3, 7) == -1);
    REQUIRE(kronecker_symbol(2, 15) == 1);
    REQUIRE(kronecker_symbol(-1, 5) == 1);
    REQUIRE(kronecker_symbol(-1, 7) == -1);
    REQUIRE(kronecker_symbol(6, 9) == 0);
    REQUIRE(kronecker_symbol(5, 0) == 0);
    REQUIRE(kronecker_symbol(1, 0) == 1);
    REQUIRE(kronecker_symbol(-4, -1) == -1);
    REQUIRE(kronecker_symbol(4, -1) == 1);
    // bottom 2 follows the residue mod 8
    REQUIRE(kronecker_symbol(7, 2) == 1);
    REQUIRE(kronecker_symbol(3, 2) == -1);
}

TEST_CASE("moebius and squarefree") {
    REQUIRE(moebius(1) == 1);
    REQUIRE(moebius(2) == -1);
    REQUIRE(moebius(6) == 1);
    REQUIRE(moebius(12) == 0);
    REQUIRE(moebius(30) == -1);
    REQUIRE(is_squarefree(15));
    REQUIRE(!is_squarefree(18));
}

TEST_CASE("divisors and prime factors") {
    REQUIRE(divisors(12) == std::vector<long long>{1, 2, 3, 4, 6, 12});
    REQUIRE(divisors(1) == std::vector<long long>{1});
    REQUIRE(prime_factors(45) == std::vector<long long>{3, 5});
    REQUIRE(padic_valuation(2, 48) == 4);
    REQUIRE(padic_valuation(3, 48) == 1);
    REQUIRE(padic_valuation(5, 48) == 0);
}

TEST_CASE("epsilon factor on odd residues") {
    REQUIRE(std::abs(epsilon_factor(1) - std::complex<double>(1, 0)) < 1e-15);
    REQUIRE(std::abs(epsilon_factor(3) - std::complex<double>(0, 1)) < 1e-15);
    REQUIRE(std::abs(epsilon_power(3, -1) - std::complex<double>(0, -1)) < 1e-15);
    REQUIRE(std::abs(epsilon_power(5, 2) - std::complex<double>(1, 0)) < 1e-15);
}

TEST_CASE("fundamental discriminant detection") {
    REQUIRE(is_fundamental(1));
    REQUIRE(is_fundamental(-3));
    REQUIRE(is_fundamental(-4));
    REQUIRE(is_fundamental(5));
    REQUIRE(is_fundamental(8));
    REQUIRE(is_fundamental(-8));
    REQUIRE(is_fundamental(12));
    REQUIRE(!is_fundamental(-9));
    REQUIRE(!is_fundamental(-12));
    REQUIRE(!is_fundamental(9));
    REQUIRE(!is_fundamental(2));
    REQUIRE(!is_fundamental(-2));
}

TEST_CASE("discriminant decomposition roundtrip") {
    auto d = decompose_discriminant(-12);
    REQUIRE(d);
    REQUIRE(d->t == -3);
    REQUIRE(d->m == 2);
    d = decompose_discriminant(45);
    REQUIRE(d);
    REQUIRE(d->t == 5);
    REQUIRE(d->m == 3);
    d = decompose_discriminant(16);
    REQUIRE(d);
    REQUIRE(d->t == 1);
    REQUIRE(d->m == 4);
    REQUIRE(!decompose_discriminant(-6));
    REQUIRE(!decompose_discriminant(7));

    auto f = fundamental_decomposition(2, 5);
    REQUIRE(f);
    REQUIRE(f->t == 5);
    REQUIRE(f->m == 1);
    f = fundamental_decomposition(3, 3);
    REQUIRE(f);
    REQUIRE(f->t == -3);
    REQUIRE(f->m == 1);
    REQUIRE(!fundamental_decomposition(2, 2));
    REQUIRE_THROWS_AS(fundamental_decomposition(2, 0), std::invalid_argument);
}

TEST_CASE("sieved divisor power sum") {
    REQUIRE(divisor_sigma(1, 3, 3, 6) == Rational(243));
    REQUIRE(divisor_sigma(1, 1, 1, 6) == Rational(12));
    REQUIRE(divisor_sigma(1, 1, 3, 4) == Rational(73));
    // coprimality to ell drops the shared divisors
    REQUIRE(divisor_sigma(3, 3, 1, 6) == Rational(3));
}
