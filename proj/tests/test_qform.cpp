#include <catch2/catch_amalgamated.hpp>
#include <hclass/qform.hpp>

using namespace hclass;

TEST_CASE("two-by-two integer matrices") {
    Mat2 id;
    REQUIRE(id.det() == 1);
    Mat2 s{0, -1, 1, 0}, t{1, 1, 0, 1};
    Mat2 st = s * t;
    REQUIRE(st.p == 0);
    REQUIRE(st.q == -1);
    REQUIRE(st.r == 1);
    REQUIRE(st.s == 1);
    Mat2 inv = st.inverse();
    Mat2 prod = st * inv;
    REQUIRE(prod.p == 1);
    REQUIRE(prod.q == 0);
    REQUIRE(prod.r == 0);
    REQUIRE(prod.s == 1);
    Mat2 bad{2, 0, 0, 1};
    REQUIRE_THROWS_AS(bad.inverse(), std::invalid_argument);
}

TEST_CASE("quadratic form basics") {
    QuadForm f{2, 1, 3};
    REQUIRE(f.disc() == 1 - 24);
    REQUIRE(f.eval(1, 0) == 2);
    REQUIRE(f.eval(0, 1) == 3);
    REQUIRE(f.eval(1, 1) == 6);
    REQUIRE(f.content() == 1);
    REQUIRE(QuadForm{2, 4, 6}.content() == 2);
    // transformation preserves the discriminant and represents the same values
    Mat2 g{1, 2, 1, 3};
    QuadForm h = f.transformed(g);
    REQUIRE(h.disc() == f.disc());
    REQUIRE(h.eval(1, 0) == f.eval(g.p, g.r));
    REQUIRE(h.eval(0, 1) == f.eval(g.q, g.s));
}

TEST_CASE("square root counts modulo 4a") {
    REQUIRE(sqrt_count(1, 1) == 1);
    REQUIRE(sqrt_count(1, -4) == 1);
    REQUIRE(sqrt_count(3, 1) == 2);
    REQUIRE(sqrt_count(5, -4) == 2);
    REQUIRE(sqrt_count(5, -3) == 0);
    REQUIRE_THROWS_AS(sqrt_count(0, 1), std::invalid_argument);
    // factored evaluation agrees with the exhaustive count
    auto spf = detail::spf_sieve(240);
    for (long long a = 1; a <= 240; ++a)
        for (long long D : {1LL, -3LL, -4LL, 5LL, 8LL, -20LL, 12LL})
            REQUIRE(detail::sqrt_count_factored(a, D, spf) == sqrt_count(a, D));
}

TEST_CASE("form reduction") {
    auto [r, m] = sl2_reduce({5, 4, 1});
    REQUIRE(r == QuadForm{1, 0, 1});
    REQUIRE(m.det() == 1);
    REQUIRE(QuadForm{5, 4, 1}.transformed(m) == r);
    // already-reduced forms are fixed
    auto [r2, m2] = sl2_reduce({1, 0, 1});
    REQUIRE(r2 == QuadForm{1, 0, 1});
    REQUIRE((m2.p == 1 && m2.q == 0 && m2.r == 0 && m2.s == 1));
    auto [r3, m3] = sl2_reduce({3, -2, 4});
    REQUIRE(r3.b >= 0);
    REQUIRE(QuadForm{3, -2, 4}.transformed(m3) == r3);
    REQUIRE_THROWS_AS(sl2_reduce({1, 0, -1}), std::invalid_argument);
    REQUIRE_THROWS_AS(sl2_reduce({-1, 0, 2}), std::invalid_argument);
}

TEST_CASE("level equivalence of forms") {
    // same class at level 1
    REQUIRE(gamma0_equivalent({1, 0, 6}, {1, 2, 7}, 1));
    // distinct classes of discriminant -24
    REQUIRE(!gamma0_equivalent({1, 0, 6}, {2, 0, 3}, 1));
    // upper-triangular transforms survive every level
    REQUIRE(gamma0_equivalent({1, 0, 6}, {1, 2, 7}, 5));
    // but the swap {1,0,6} <-> {6,0,1} needs a lower-left unit
    REQUIRE(gamma0_equivalent({1, 0, 6}, {6, 0, 1}, 1));
    REQUIRE(!gamma0_equivalent({1, 0, 6}, {6, 0, 1}, 5));
    REQUIRE_THROWS_AS(gamma0_equivalent({1, 0, 1}, {1, 0, 2}, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(gamma0_equivalent({1, 0, 1}, {1, 0, 1}, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(gamma0_equivalent({1, 0, -1}, {1, 0, -1}, 1), std::invalid_argument);
}

TEST_CASE("class enumeration") {
    auto one = enumerate_heegner_classes(1, -4);
    REQUIRE(one.size() == 1);
    REQUIRE(one[0].representative == QuadForm{1, 0, 1});
    REQUIRE(one[0].stabilizer_order == 2);
    REQUIRE(std::abs(one[0].point - std::complex<double>(0.0, 1.0)) < 1e-15);

    auto three = enumerate_heegner_classes(1, -3);
    REQUIRE(three.size() == 1);
    REQUIRE(three[0].representative == QuadForm{1, 1, 1});
    REQUIRE(three[0].stabilizer_order == 3);

    auto h23 = enumerate_heegner_classes(1, -23);
    REQUIRE(h23.size() == 3);
    REQUIRE(h23[0].representative == QuadForm{1, 1, 6});
    REQUIRE(h23[1].representative == QuadForm{2, -1, 3});
    REQUIRE(h23[2].representative == QuadForm{2, 1, 3});
    for (const auto& hc : h23) REQUIRE(hc.stabilizer_order == 1);

    auto mirrored = enumerate_heegner_classes(1, -23, std::nullopt, true);
    REQUIRE(mirrored.size() == 6);
    REQUIRE(mirrored[3].representative.a == -1);

    REQUIRE_THROWS_AS(enumerate_heegner_classes(1, 4), std::invalid_argument);
    REQUIRE_THROWS_AS(enumerate_heegner_classes(1, -6), std::invalid_argument);
    REQUIRE_THROWS_AS(enumerate_heegner_classes(0, -4), std::invalid_argument);
}

TEST_CASE("pell equation minimal solutions") {
    REQUIRE(pell_automorph(5) == std::pair<long long, long long>{3, 1});
    REQUIRE(pell_automorph(8) == std::pair<long long, long long>{6, 2});
    REQUIRE(pell_automorph(12) == std::pair<long long, long long>{4, 1});
    REQUIRE(pell_automorph(13) == std::pair<long long, long long>{11, 3});
    REQUIRE(pell_automorph(17) == std::pair<long long, long long>{66, 16});
    REQUIRE_THROWS_AS(pell_automorph(16), std::invalid_argument);
    REQUIRE_THROWS_AS(pell_automorph(-4), std::invalid_argument);
    REQUIRE_THROWS_AS(pell_automorph(7), std::invalid_argument);
}

TEST_CASE("automorph fixes its form") {
    QuadForm f{1, 1, -1};
    Mat2 g = automorph_matrix(f);
    REQUIRE((g.p == 1 && g.q == 1 && g.r == 1 && g.s == 2));
    REQUIRE(g.det() == 1);
    REQUIRE(f.transformed(g) == f);
    QuadForm f2{1, 0, -2};
    REQUIRE(f2.transformed(automorph_matrix(f2)) == f2);
}

TEST_CASE("unfolded trace sums") {
    TruncationConfig tc;
    tc.a_max = 4000;
    auto tr = real_trace_unfolded(2, 1, 5, tc);
    REQUIRE(tr.tail > 0.0);
    REQUIRE(std::abs(tr.value - 4.0) < tr.tail + 1e-3);
    // off the discriminant progression the trace vanishes identically
    auto zero = real_trace_unfolded(2, 1, 7, tc);
    REQUIRE(zero.value == 0.0);
    REQUIRE(zero.tail == 0.0);
    REQUIRE_THROWS_AS(real_trace_unfolded(1, 1, 5, tc), std::invalid_argument);
    REQUIRE_THROWS_AS(real_trace_unfolded(2, 1, -5, tc), std::invalid_argument);
    // defaults keep the documented values
    TruncationConfig d;
    REQUIRE(d.a_max == 50000);
    REQUIRE(d.lattice_bound == 3000);
    REQUIRE(d.c_max == 20000);
}
