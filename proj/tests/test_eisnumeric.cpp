#include <catch2/catch_amalgamated.hpp>
#include <hclass/eisnumeric.hpp>

using namespace hclass;

TEST_CASE("theta integral quadrature") {
    // closed values: k = 2 gives 8/3, k = 3 gives -32 i/15
    auto t2 = theta_integral_quadrature(2, 2048);
    REQUIRE(t2.real() == Catch::Approx(8.0 / 3.0).epsilon(1e-10));
    REQUIRE(std::abs(t2.imag()) < 1e-10);
    auto t3 = theta_integral_quadrature(3, 2048);
    REQUIRE(t3.real() == Catch::Approx(-32.0 / 15.0).epsilon(1e-10));
    REQUIRE(std::abs(t3.imag()) < 1e-10);
    REQUIRE_THROWS_AS(theta_integral_quadrature(0, 128), std::invalid_argument);
}

TEST_CASE("lattice sum evaluation") {
    TruncationConfig tc;
    tc.lattice_bound = 400;
    auto r = eval_F0(1, 2, {0.0, 1.0}, tc);
    REQUIRE(r.value == Catch::Approx(2.7841966657818986).epsilon(1e-9));
    REQUIRE(r.tail > 0.0);
    REQUIRE(r.tail < 1e-4);
    REQUIRE_THROWS_AS(eval_F0(1, 1, {0.0, 1.0}, tc), std::invalid_argument);
    REQUIRE_THROWS_AS(eval_F0(0, 2, {0.0, 1.0}, tc), std::invalid_argument);
    REQUIRE_THROWS_AS(eval_F0(1, 2, {0.0, -1.0}, tc), std::invalid_argument);
}

TEST_CASE("holomorphic eisenstein series numerically") {
    auto v = eval_E2k(1, 2, {0.25, 1.1}, 40);
    REQUIRE(v.real() == Catch::Approx(0.99785615048181431).epsilon(1e-12));
    REQUIRE(v.imag() == Catch::Approx(0.23909538513589523).epsilon(1e-12));
    REQUIRE_THROWS_AS(eval_E2k(1, 2, {0.0, -1.0}, 40), std::invalid_argument);
}

TEST_CASE("plus-space coefficients") {
    TruncationConfig tc;
    tc.c_max = 2000;
    auto c0 = F_plus_coefficient(2, 1, 0, PlusMode::closed);
    REQUIRE(std::abs(c0 - std::complex<double>(0.14538067351093792, 0.0)) < 1e-12);
    auto cm4 = F_plus_coefficient(2, 1, -4, PlusMode::closed);
    REQUIRE(std::abs(cm4 - std::complex<double>(0.1964234148244009, 0.0)) < 1e-12);
    // off the support the coefficient vanishes identically
    REQUIRE(std::abs(F_plus_coefficient(2, 1, 2, PlusMode::closed)) == 0.0);
    REQUIRE(std::abs(F_plus_coefficient(2, 1, 1, PlusMode::closed)) == 0.0);
    // direct truncation approaches the closed value
    auto direct = F_plus_coefficient(2, 1, -4, PlusMode::direct, tc);
    REQUIRE(std::abs(direct - cm4) < 0.05);
    REQUIRE_THROWS_AS(F_plus_coefficient(1, 1, 0, PlusMode::closed), std::invalid_argument);
}

TEST_CASE("cycle integrals against unfolded traces") {
    TruncationConfig tc;
    tc.a_max = 20000;
    // the direct quadrature computes the negative of each unfolded class term
    auto c5 = cycle_integral_direct(2, 1, {1, 1, -1}, tc);
    auto t5 = real_trace_unfolded(2, 1, 5, tc);
    REQUIRE(std::abs(-c5.real() - t5.value) < 1e-3);
    REQUIRE(std::abs(c5.imag()) < 1e-6);
    auto c8 = cycle_integral_direct(2, 1, {1, 0, -2}, tc);
    auto t8 = real_trace_unfolded(2, 1, 8, tc);
    REQUIRE(std::abs(-c8.real() - t8.value) < 1e-3);
    REQUIRE_THROWS_AS(cycle_integral_direct(1, 1, {1, 1, -1}, tc), std::invalid_argument);
    REQUIRE_THROWS_AS(cycle_integral_direct(2, 1, {1, 0, 1}, tc), std::invalid_argument);
    REQUIRE_THROWS_AS(cycle_integral_direct(2, 1, {1, 3, 0}, tc), std::invalid_argument);
}

TEST_CASE("imaginary trace sums") {
    TruncationConfig tc;
    tc.lattice_bound = 300;
    // one class of discriminant -4 with stabilizer order 2
    double tr = imag_trace(2, 1, -4, tc);
    double single = eval_F0(1, 2, {0.0, 1.0}, tc).value;
    REQUIRE(tr == Catch::Approx(0.5 * single).epsilon(1e-12));
    REQUIRE_THROWS_AS(imag_trace(2, 1, 4, tc), std::invalid_argument);
}
