#include <catch2/catch_amalgamated.hpp>
#include <hclass/verify.hpp>

using namespace hclass;

TEST_CASE("tolerance table lookup") {
    const auto& row = tolerance_row("thm-1-1/constant-closed");
    REQUIRE(row.tolerance == 1e-9);
    REQUIRE(std::string(row.rationale).size() > 0);
    REQUIRE_THROWS_AS(tolerance_row("no-such-check"), std::invalid_argument);
}

TEST_CASE("tolerance resolution") {
    VerifyConfig cfg;
    REQUIRE(resolved_tolerance(cfg, "primitives/lattice-moebius") == 1e-6);
    cfg.quick = true;
    REQUIRE(resolved_tolerance(cfg, "primitives/lattice-moebius") == 2e-6);
    // rows whose tolerance is a computed tail have no fixed number to resolve
    REQUIRE_THROWS_AS(resolved_tolerance(cfg, "thm-1-1/constant-direct"), std::logic_error);
    cfg.tol_override = 0.5;
    REQUIRE(resolved_tolerance(cfg, "thm-1-1/constant-direct") == 0.5);
    REQUIRE(resolved_tolerance(cfg, "primitives/lattice-moebius") == 0.5);
}

TEST_CASE("quick mode halves truncation bounds") {
    VerifyConfig cfg;
    cfg.trunc.a_max = 1000;
    cfg.trunc.c_max = 800;
    cfg.trunc.lattice_bound = 600;
    REQUIRE(cfg.a_max() == 1000);
    cfg.quick = true;
    REQUIRE(cfg.a_max() == 500);
    REQUIRE(cfg.c_max() == 400);
    REQUIRE(cfg.lattice_bound() == 300);
}

TEST_CASE("report conventions") {
    auto num = detail::numeric_report("demo", {{"n", "1"}}, 1.0, 2.0, 0.6, "why", 3.0);
    REQUIRE(num.abs_error == 1.0);
    REQUIRE(num.rel_error == 0.5);
    REQUIRE(num.pass);
    REQUIRE(num.lhs == "1");
    REQUIRE(num.rhs == "2");
    // tiny right side switches the denominator to 1
    auto absd = detail::numeric_report("demo", {}, 1e-20, 0.0, 1e-9, "why", 0.0);
    REQUIRE(absd.rel_error == absd.abs_error);
    // complex formatting
    auto cplx = detail::numeric_report("demo", {}, {1.0, -2.0}, {1.0, -2.0}, 0.0, "why", 0.0);
    REQUIRE(cplx.lhs == "1 - 2i");
    REQUIRE(cplx.pass);

    auto ok = detail::exact_report("demo", {}, "-7/12", "-7/12", "why", 0.0);
    REQUIRE(ok.pass);
    REQUIRE(ok.abs_error == 0.0);
    auto bad = detail::exact_report("demo", {}, "-7/12", "7/12", "why", 0.0);
    REQUIRE(!bad.pass);
    REQUIRE(std::isinf(bad.abs_error));

    auto agg = detail::numeric_aggregate("demo", {}, 12, 2e-11, 1e-10, "why", 0.0);
    REQUIRE(agg.pass);
    REQUIRE(agg.rhs == "0");
    REQUIRE(agg.parameters.back() == std::pair<std::string, std::string>{"checks", "12"});
    auto viol = detail::exact_aggregate("demo", {}, 10, 3, "why", 0.0);
    REQUIRE(!viol.pass);
    REQUIRE(viol.lhs == "3");
}

TEST_CASE("canonical sort is numeric-aware") {
    std::vector<VerificationReport> reports(3);
    reports[0].identity_id = "x";
    reports[0].parameters = {{"n", "10"}};
    reports[1].identity_id = "x";
    reports[1].parameters = {{"n", "9"}};
    reports[2].identity_id = "a";
    reports[2].parameters = {{"n", "100"}};
    canonical_sort(reports);
    REQUIRE(reports[0].identity_id == "a");
    REQUIRE(reports[1].parameters[0].second == "9");
    REQUIRE(reports[2].parameters[0].second == "10");
}

TEST_CASE("json serialization is deterministic") {
    VerifyConfig cfg;
    auto a = suite_theorem_1_4_constant(2, 3, cfg);
    auto b = suite_theorem_1_4_constant(2, 3, cfg);
    canonical_sort(a);
    canonical_sort(b);
    std::string ja = reports_to_json(a);
    std::string jb = reports_to_json(b);
    REQUIRE(ja == jb);
    REQUIRE(ja.find("\"runtime_ms\": 0") != std::string::npos);
    // timings only appear on request
    std::string jt = reports_to_json(a, true);
    REQUIRE(jt.size() >= ja.size());
    // non-finite numbers are quoted strings
    std::vector<VerificationReport> inf(1);
    inf[0] = detail::exact_report("demo", {}, "a", "b", "why", 0.0);
    REQUIRE(reports_to_json(inf).find("\"infinity\"") != std::string::npos);
}

TEST_CASE("constant identity suite passes") {
    auto reports = suite_theorem_1_4_constant(2, 3);
    REQUIRE(reports.size() == 1);
    REQUIRE(reports[0].identity_id == "thm-1-4-const/identity");
    REQUIRE(reports[0].pass);
    REQUIRE(all_pass(reports));
    REQUIRE_THROWS_AS(suite_theorem_1_4_constant(3, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(suite_theorem_1_4_constant(2, 4), std::invalid_argument);
}

TEST_CASE("suite argument validation") {
    REQUIRE_THROWS_AS(suite_theorem_1_1(2, 9, 4), std::invalid_argument);
    REQUIRE_THROWS_AS(suite_theorem_1_1(2, 1, -1), std::invalid_argument);
    REQUIRE_THROWS_AS(suite_cor_1_3(3, 3, {1}), std::invalid_argument);
    REQUIRE_THROWS_AS(suite_cor_1_3(2, 4, {1}), std::invalid_argument);
    REQUIRE_THROWS_AS(suite_cor_1_3(2, 3, {2}), std::invalid_argument);
    REQUIRE_THROWS_AS(suite_cor_1_3(2, 3, {0}), std::invalid_argument);
    REQUIRE_THROWS_AS(suite_cor_1_5(2, 4, {3}), std::invalid_argument);
    REQUIRE_THROWS_AS(suite_cor_1_5(2, 3, {0}), std::invalid_argument);
    REQUIRE_THROWS_AS(suite_theorem_1_2(3, 3, 4), std::invalid_argument);
}

TEST_CASE("skipped discriminant classes are reported") {
    auto reports = suite_cor_1_5(2, 3, {1, 2});
    REQUIRE(reports.size() == 2);
    for (const auto& r : reports) {
        REQUIRE(r.identity_id == "cor-1-5/skip");
        REQUIRE(r.pass);
    }
}

TEST_CASE("square-route reports pass quickly") {
    auto reports = suite_cor_1_3(2, 3, {1, 4});
    REQUIRE(reports.size() == 2);
    for (const auto& r : reports) {
        REQUIRE(r.identity_id == "cor-1-3/route");
        REQUIRE(r.pass);
        REQUIRE(r.rel_error <= 1e-6);
    }
}
