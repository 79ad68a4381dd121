#pragma once

#include "eisnumeric.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace hclass {

// One self-contained check result: every field needed to recompute the
// comparison is recorded (inputs, both sides, tolerance and its origin,
// truncation tails).  Exact comparisons carry rational strings and zero error.
struct VerificationReport {
    std::string identity_id;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::string lhs, rhs;
    double abs_error = 0.0;
    double rel_error = 0.0;
    double tolerance = 0.0;
    std::string tolerance_rationale;
    std::vector<std::pair<std::string, double>> tail_bounds;
    bool pass = false;
    double runtime_ms = 0.0;
};

// Knobs shared by all suites.  quick halves the truncation bounds and applies
// the per-check tolerance scale from the tolerance table; tol_override wins
// over both when set.
struct VerifyConfig {
    TruncationConfig trunc{};
    std::optional<double> tol_override;
    unsigned long long seed = 1;
    bool quick = false;

    long long a_max() const { return quick ? std::max<long long>(trunc.a_max / 2, 1) : trunc.a_max; }
    long long c_max() const { return quick ? std::max<long long>(trunc.c_max / 2, 1) : trunc.c_max; }
    long long lattice_bound() const {
        return quick ? std::max<long long>(trunc.lattice_bound / 2, 1) : trunc.lattice_bound;
    }
};

// Fixed per-check tolerances.  tolerance < 0 marks checks whose tolerance is a
// computed truncation tail rather than a fixed number; quick_scale relaxes the
// fixed ones when bounds are halved.
struct ToleranceRow {
    const char* key;
    double tolerance;
    double quick_scale;
    const char* rationale;
};

inline const std::vector<ToleranceRow>& tolerance_table() {
    static const std::vector<ToleranceRow> rows = {
        {"thm-1-1/constant-closed", 1e-9, 1.0,
         "closed-form evaluation on both sides; double precision with headroom"},
        {"thm-1-1/bridge-closed", 1e-9, 1.0,
         "exact rational class-number side against closed zeta values; double precision headroom"},
        {"thm-1-1/constant-direct", -1.0, 1.0,
         "rigorous truncation tail of the modulus sum, relative to the right side"},
        {"thm-1-1/bridge-direct", -1.0, 1.0,
         "rigorous truncation tail of the modulus sum scaled by n^(k-1/2), relative to the right side"},
        {"thm-1-2/constant", 0.0, 1.0,
         "exact rational identity; the common sqrt(p) marker cancels symbolically"},
        {"thm-1-2/nonsquare", 1e-4, 4.0,
         "a-series truncated at a_max with O(a_max^(3/2-k)) tail; bound chosen for a_max = 50000"},
        {"cor-1-3/route", 1e-6, 1.0,
         "both sides closed-form; accumulated double rounding across the local factor products"},
        {"cor-1-5/trace", 1e-3, 4.0,
         "lattice sum truncated at lattice_bound with doubling constant held fixed after one calibration"},
        {"thm-1-4-const/identity", 1e-9, 1.0,
         "closed-form constants on both sides; double precision with headroom"},
        {"primitives/bernoulli-recurrence", 0.0, 1.0, "exact rational recurrence"},
        {"primitives/zeta-bernoulli", 0.0, 1.0, "exact rational identity"},
        {"primitives/zeta-even-numeric", 1e-10, 1.0,
         "series evaluation of the zeta value against the exact rational times pi power"},
        {"primitives/exact-constants", 0.0, 1.0, "frozen exact values"},
        {"primitives/rational-reduction", 0.0, 1.0, "exact normalization invariants"},
        {"primitives/kronecker-multiplicativity", 0.0, 1.0, "exact integer identity"},
        {"primitives/level-sieve", 0.0, 1.0, "exact divisor sieve identity"},
        {"primitives/fundamental-roundtrip", 0.0, 1.0, "exact decomposition roundtrip"},
        {"primitives/divisor-sigma-classical", 0.0, 1.0, "exact divisor power sums"},
        {"primitives/weight-periodicity", 0.0, 1.0,
         "weights two apart share one code path, so the sums are bitwise identical"},
        {"primitives/kloosterman-reflection", 1e-9, 1.0,
         "term-by-term bijection of finite exponential sums; rounding of the negated phases only"},
        {"primitives/local-factor-vanishing", 1e-10, 1.0,
         "complete cancellation past the cutoff; residue is summation rounding over p^j phases"},
        {"primitives/local-factor-closed", 1e-10, 1.0,
         "finite p-power sums terminate exactly at the cutoff; rounding only"},
        {"primitives/ramanujan-zeta", 1e-8, 1.0,
         "exact rational zeta values against numeric Euler products; the numeric side carries"
         " the series truncation of the L-evaluations"},
        {"primitives/kohnen-per-a", 1e-8, 1.0,
         "integer representation counts recovered from O(a) exponential sums"},
        {"primitives/hurwitz-support", 0.0, 1.0, "exact vanishing off the discriminant support"},
        {"primitives/hurwitz-anchors", 0.0, 1.0, "frozen exact class number values"},
        {"primitives/combination-constant", 0.0, 1.0, "exact constant term of the combination"},
        {"primitives/xi-constants", 0.0, 1.0, "exact constant-term image"},
        {"primitives/raise-scalar", 0.0, 1.0, "frozen exact raising coefficients"},
        {"primitives/eisenstein-collapse", 0.0, 1.0,
         "level-one coefficients collapse to classical divisor sums exactly"},
        {"primitives/combination-xi-bridge", 1e-8, 1.0,
         "exact rational combination against the numerically assembled image coefficients"},
        {"primitives/heegner-point", 1e-12, 1.0,
         "representative root must satisfy its quadratic to rounding precision"},
        {"primitives/class-stability", 0.0, 1.0,
         "enumeration representatives must be independent of the search bound"},
        {"primitives/equivalence-relation", 0.0, 1.0,
         "transforms inside the level group must preserve the class, distinct classes must separate"},
        {"primitives/sqrt-count-crt", 0.0, 1.0, "exact multiplicativity over coprime moduli"},
        {"primitives/sqrt-count-factored", 0.0, 1.0,
         "factored root count must match the exhaustive count"},
        {"primitives/pell-automorph", 0.0, 1.0, "frozen fundamental solutions; automorphs fix forms"},
        {"primitives/lattice-moebius", 1e-6, 2.0,
         "coprime row sum against the Moebius resummation of the full lattice over the same box"},
        {"primitives/theta-integral", 1e-10, 1.0,
         "composite quadrature with series end patches against the closed gamma ratio"},
        {"primitives/incomplete-gamma", 1e-12, 1.0,
         "recurrence and frozen high-precision reference values"},
        {"primitives/fplus-agreement", 1.0, 1.0,
         "deviation of closed against truncated coefficients measured as a fraction of the rigorous tail"},
        {"primitives/f0-invariance", 1.0, 1.0,
         "deviation across fractional-linear moves measured as a fraction of the summed tails"},
    };
    return rows;
}

inline const ToleranceRow& tolerance_row(const std::string& key) {
    for (const auto& row : tolerance_table())
        if (key == row.key) return row;
    throw std::invalid_argument("tolerance_row: unknown check key " + key);
}

inline double resolved_tolerance(const VerifyConfig& cfg, const std::string& key) {
    const ToleranceRow& row = tolerance_row(key);
    if (cfg.tol_override) return *cfg.tol_override;
    if (row.tolerance < 0.0)
        throw std::logic_error("resolved_tolerance: " + key + " uses a computed tail tolerance");
    return cfg.quick ? row.tolerance * row.quick_scale : row.tolerance;
}

namespace detail {

inline std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string fmt_complex(std::complex<double> z) {
    if (z.imag() == 0.0) return fmt_double(z.real());
    std::string s = fmt_double(z.real());
    s += z.imag() < 0.0 ? " - " : " + ";
    s += fmt_double(std::abs(z.imag()));
    s += "i";
    return s;
}

struct Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

using Params = std::vector<std::pair<std::string, std::string>>;

inline void set_errors(VerificationReport& r, std::complex<double> lhs, std::complex<double> rhs) {
    double a = std::abs(lhs - rhs);
    r.abs_error = a;
    r.rel_error = std::abs(rhs) > 1e-30 ? a / std::abs(rhs) : a;
}

inline VerificationReport numeric_report(std::string id, Params params, std::complex<double> lhs,
                                         std::complex<double> rhs, double tol,
                                         std::string rationale, double ms) {
    VerificationReport r;
    r.identity_id = std::move(id);
    r.parameters = std::move(params);
    r.lhs = fmt_complex(lhs);
    r.rhs = fmt_complex(rhs);
    set_errors(r, lhs, rhs);
    r.tolerance = tol;
    r.tolerance_rationale = std::move(rationale);
    r.pass = r.rel_error <= tol;
    r.runtime_ms = ms;
    return r;
}

inline VerificationReport exact_report(std::string id, Params params, const std::string& lhs,
                                       const std::string& rhs, std::string rationale, double ms) {
    VerificationReport r;
    r.identity_id = std::move(id);
    r.parameters = std::move(params);
    r.lhs = lhs;
    r.rhs = rhs;
    bool equal = lhs == rhs;
    r.abs_error = equal ? 0.0 : std::numeric_limits<double>::infinity();
    r.rel_error = r.abs_error;
    r.tolerance = 0.0;
    r.tolerance_rationale = std::move(rationale);
    r.pass = equal;
    r.runtime_ms = ms;
    return r;
}

inline VerificationReport exact_aggregate(std::string id, Params params, long long checks,
                                          long long violations, std::string rationale, double ms) {
    VerificationReport r;
    r.identity_id = std::move(id);
    params.emplace_back("checks", std::to_string(checks));
    r.parameters = std::move(params);
    r.lhs = std::to_string(violations);
    r.rhs = "0";
    r.abs_error = violations ? std::numeric_limits<double>::infinity() : 0.0;
    r.rel_error = r.abs_error;
    r.tolerance = 0.0;
    r.tolerance_rationale = std::move(rationale);
    r.pass = violations == 0;
    r.runtime_ms = ms;
    return r;
}

inline VerificationReport numeric_aggregate(std::string id, Params params, long long checks,
                                            double worst, double tol, std::string rationale,
                                            double ms) {
    VerificationReport r;
    r.identity_id = std::move(id);
    params.emplace_back("checks", std::to_string(checks));
    r.parameters = std::move(params);
    r.lhs = fmt_double(worst);
    r.rhs = "0";
    r.abs_error = worst;
    r.rel_error = worst;
    r.tolerance = tol;
    r.tolerance_rationale = std::move(rationale);
    r.pass = worst <= tol;
    r.runtime_ms = ms;
    return r;
}

inline bool parse_full_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
}

inline bool param_value_less(const std::string& a, const std::string& b) {
    double da, db;
    if (parse_full_double(a, da) && parse_full_double(b, db)) {
        if (da != db) return da < db;
        return a < b;
    }
    return a < b;
}

inline bool report_less(const VerificationReport& x, const VerificationReport& y) {
    if (x.identity_id != y.identity_id) return x.identity_id < y.identity_id;
    size_t n = std::min(x.parameters.size(), y.parameters.size());
    for (size_t i = 0; i < n; ++i) {
        if (x.parameters[i].first != y.parameters[i].first)
            return x.parameters[i].first < y.parameters[i].first;
        if (x.parameters[i].second != y.parameters[i].second)
            return param_value_less(x.parameters[i].second, y.parameters[i].second);
    }
    return x.parameters.size() < y.parameters.size();
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 8);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

inline std::string json_number(double v) {
    if (std::isfinite(v)) return fmt_double(v);
    return std::string("\"") + (std::isnan(v) ? "nan" : (v > 0 ? "infinity" : "-infinity")) + "\"";
}

}  // namespace detail

inline void canonical_sort(std::vector<VerificationReport>& reports) {
    std::stable_sort(reports.begin(), reports.end(), detail::report_less);
}

inline bool all_pass(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

// Deterministic serialization: fixed field order, fixed float format, map-free.
// runtime_ms is emitted as 0 unless include_timings is set, so equal inputs
// produce byte-identical documents.
inline std::string reports_to_json(const std::vector<VerificationReport>& reports,
                                   bool include_timings = false) {
    std::string out = "[\n";
    for (size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        out += "  {\n";
        out += "    \"identity_id\": \"" + detail::json_escape(r.identity_id) + "\",\n";
        out += "    \"parameters\": {";
        for (size_t j = 0; j < r.parameters.size(); ++j) {
            if (j) out += ", ";
            out += "\"" + detail::json_escape(r.parameters[j].first) + "\": \"" +
                   detail::json_escape(r.parameters[j].second) + "\"";
        }
        out += "},\n";
        out += "    \"lhs\": \"" + detail::json_escape(r.lhs) + "\",\n";
        out += "    \"rhs\": \"" + detail::json_escape(r.rhs) + "\",\n";
        out += "    \"abs_error\": " + detail::json_number(r.abs_error) + ",\n";
        out += "    \"rel_error\": " + detail::json_number(r.rel_error) + ",\n";
        out += "    \"tolerance\": " + detail::json_number(r.tolerance) + ",\n";
        out += "    \"tolerance_rationale\": \"" + detail::json_escape(r.tolerance_rationale) +
               "\",\n";
        out += "    \"tail_bounds\": {";
        for (size_t j = 0; j < r.tail_bounds.size(); ++j) {
            if (j) out += ", ";
            out += "\"" + detail::json_escape(r.tail_bounds[j].first) +
                   "\": " + detail::json_number(r.tail_bounds[j].second);
        }
        out += "},\n";
        out += std::string("    \"pass\": ") + (r.pass ? "true" : "false") + ",\n";
        // reported as a whole number of milliseconds
        out += "    \"runtime_ms\": " +
               std::to_string(include_timings ? std::llround(r.runtime_ms) : 0LL) + "\n";
        out += i + 1 < reports.size() ? "  },\n" : "  }\n";
    }
    out += "]\n";
    return out;
}

// ---------------------------------------------------------------------------
// Identity suites
// ---------------------------------------------------------------------------

// Per index n: the divisor-weighted rational combination of class numbers,
// scaled by Gamma(k+1/2)/(-2 pi i)^{k+1/2}, must equal conj K+(0,-n) n^{k-1/2}.
// The n = 0 row compares the incomplete-zeta ratio times the explicit local
// products against conj K+(0,0).  Both the closed zeta route and the truncated
// modulus sum are reported.
inline std::vector<VerificationReport> suite_theorem_1_1(int k, long long N, long long n_max,
                                                         const VerifyConfig& cfg = {}) {
    detail::validate_hurwitz_args(k, N, N);
    if (n_max < 0) throw std::invalid_argument("suite_theorem_1_1: n_max must be >= 0");
    const int tk = (k & 1) ? 1 : 3;
    const long long cmax = cfg.c_max();
    std::vector<VerificationReport> out;

    auto bridge_total = [&](long long n) {
        Rational tot(0);
        for (long long ell : divisors(N)) {
            Rational w(1);
            for (long long p : prime_factors(N / ell))
                w *= Rational(p - 1) / (Rational(p) * (int_pow(p, 2 * k - 1) - Rational(1)));
            tot += w * hurwitz_class_number(k, ell, N, n) / incomplete_L_nonpositive(2 * k, 1, ell);
        }
        return tot;
    };
    const std::complex<double> pref =
        std::tgamma(k + 0.5) * std::pow(2.0 * kPi, -(k + 0.5)) *
        std::polar(1.0, kPi * (k + 0.5) / 2.0);

    std::vector<long long> valid_ns;
    for (long long n = 1; n <= n_max; ++n) {
        long long v = (((k & 1) ? -n : n) % 4 + 4) % 4;
        if (v < 2) valid_ns.push_back(n);
    }

    // one modulus sweep serves the constant and every bridge index
    detail::Stopwatch batch_sw;
    std::vector<long long> batch_ns = {0};
    for (long long n : valid_ns) batch_ns.push_back(-n);
    auto batch = plus_zeta_direct_batch(N, batch_ns, {{tk, k}}, cmax);
    const double batch_ms = batch_sw.ms() / static_cast<double>(batch_ns.size());
    const double tail0 = batch.tails[0];

    // n = 0: incomplete-zeta ratio, the 2-adic bracket, and the odd local product
    {
        detail::Stopwatch sw;
        double lratio = incomplete_L_numeric(2.0 * k - 1.0, 1, 4 * N, 1e-14) /
                        incomplete_L_numeric(2.0 * k, 1, 4 * N, 1e-14);
        double two2k1 = std::pow(2.0, 2 * k + 1);
        std::complex<double> bracket =
            std::complex<double>(1.0, (k & 1) ? -1.0 : 1.0) * (1.0 / (two2k1 - 4.0) + 1.0 / two2k1);
        double prodN = 1.0;
        for (long long p : prime_factors(N)) {
            double pd = static_cast<double>(p);
            prodN *= (pd - 1.0) / (pd * (std::pow(pd, 2.0 * k - 1.0) - 1.0));
        }
        std::complex<double> lhs0 = lratio * bracket * prodN;
        std::complex<double> rhs_closed = std::conj(plus_zeta_closed(k, N, 0));
        out.push_back(detail::numeric_report(
            "thm-1-1/constant-closed",
            {{"k", std::to_string(k)}, {"N", std::to_string(N)}}, lhs0, rhs_closed,
            resolved_tolerance(cfg, "thm-1-1/constant-closed"),
            tolerance_row("thm-1-1/constant-closed").rationale, sw.ms()));

        std::complex<double> rhs_direct = std::conj(batch.values[0][0]);
        double tol0 = cfg.tol_override
                          ? *cfg.tol_override
                          : tail0 / std::max(std::abs(rhs_direct), 1e-30);
        auto rep = detail::numeric_report(
            "thm-1-1/constant-direct",
            {{"k", std::to_string(k)}, {"N", std::to_string(N)}, {"c_max", std::to_string(cmax)}},
            lhs0, rhs_direct, tol0, tolerance_row("thm-1-1/constant-direct").rationale, batch_ms);
        rep.tail_bounds.emplace_back("modulus-sum", tail0);
        out.push_back(rep);
    }

    for (size_t i = 0; i < valid_ns.size(); ++i) {
        long long n = valid_ns[i];
        detail::Stopwatch sw;
        double npow = std::pow(static_cast<double>(n), k - 0.5);
        std::complex<double> lhs = pref * bridge_total(n).to_double();
        std::complex<double> rhs_closed = std::conj(plus_zeta_closed(k, N, -n)) * npow;
        out.push_back(detail::numeric_report(
            "thm-1-1/bridge-closed",
            {{"k", std::to_string(k)}, {"N", std::to_string(N)}, {"n", std::to_string(n)}}, lhs,
            rhs_closed, resolved_tolerance(cfg, "thm-1-1/bridge-closed"),
            tolerance_row("thm-1-1/bridge-closed").rationale, sw.ms()));

        std::complex<double> rhs_direct = std::conj(batch.values[0][i + 1]) * npow;
        double tail_n = tail0 * npow;
        double tol_n = cfg.tol_override ? *cfg.tol_override
                                        : tail_n / std::max(std::abs(rhs_direct), 1e-30);
        auto rep = detail::numeric_report(
            "thm-1-1/bridge-direct",
            {{"k", std::to_string(k)},
             {"N", std::to_string(N)},
             {"n", std::to_string(n)},
             {"c_max", std::to_string(cmax)}},
            lhs, rhs_direct, tol_n, tolerance_row("thm-1-1/bridge-direct").rationale, batch_ms);
        rep.tail_bounds.emplace_back("modulus-sum", tail_n);
        out.push_back(rep);
    }
    return out;
}

namespace detail {

// Square-index route: the unfolded a-series prefactor applied to the closed
// zeta combination at -D must match the exact scalar times the weighted
// class-number combination at D.  Both sides carry sqrt(p) symbolically.
inline VerificationReport cor_1_3_report(const std::string& id, int k, long long p, long long D,
                                         const VerifyConfig& cfg) {
    Stopwatch sw;
    Rational pr = sqrt_pi_gamma_ratio(k) / int_pow(2, 2 * k - 2);
    if (k & 1) pr = -pr;
    double zk = zeta_even_positive(k).to_double();
    double pk = std::pow(static_cast<double>(p), -static_cast<double>(k));
    std::complex<double> SmD = pk * plus_zeta_closed(k, 1, -D) +
                               (1.0 - pk) * plus_zeta_closed(k, p, -D);
    std::complex<double> i_unit(0.0, 1.0);
    std::complex<double> sign_i = (k & 1) ? -i_unit : i_unit;
    std::complex<double> inner = sign_i *
                                 (1.0 - ((k & 1) ? -1.0 : 1.0) * i_unit) *
                                 std::pow(4.0, k - 0.5) * zk * SmD;
    std::complex<double> lhs = std::pow(static_cast<double>(D), k - 0.5) * pr.to_double() * inner;

    ScalarDescriptor scalar = theorem_1_2_rhs(k, p, 0).first;
    Rational pkr = int_pow(p, -k);
    Rational beta = Rational(p - 1) / (int_pow(p, 2 * k) - Rational(p));
    Rational combo = pkr * hurwitz_class_number(k, 1, 1, D) +
                     (Rational(1) - pkr) *
                         (beta * hurwitz_class_number(k, 1, p, D) +
                          hurwitz_class_number(k, p, p, D) /
                              (Rational(1) - int_pow(p, 2 * k - 1)));
    double rhs = scalar.coefficient.to_double() * combo.to_double();

    return numeric_report(
        id, {{"k", std::to_string(k)}, {"p", std::to_string(p)}, {"D", std::to_string(D)}}, lhs,
        rhs, resolved_tolerance(cfg, "cor-1-3/route"), tolerance_row("cor-1-3/route").rationale,
        sw.ms());
}

}  // namespace detail

inline std::vector<VerificationReport> suite_cor_1_3(int k, long long p,
                                                     const std::vector<long long>& discs,
                                                     const VerifyConfig& cfg = {}) {
    if (k < 2 || (k & 1)) throw std::invalid_argument("suite_cor_1_3: k must be even, >= 2");
    if (p < 3 || (p & 1) == 0 || !detail::is_prime(p))
        throw std::invalid_argument("suite_cor_1_3: p must be an odd prime");
    std::vector<VerificationReport> out;
    for (long long D : discs) {
        if (D < 1) throw std::invalid_argument("suite_cor_1_3: indices must be positive");
        long long r = isqrt(D);
        if (r * r != D) throw std::invalid_argument("suite_cor_1_3: indices must be squares");
        out.push_back(detail::cor_1_3_report("cor-1-3/route", k, p, D, cfg));
    }
    return out;
}

// Even weight, prime level: the exact constant identity, the unfolded real
// trace against the scalar-times-series coefficient at every admissible
// non-square index, and the closed square-index route.
inline std::vector<VerificationReport> suite_theorem_1_2(int k, long long p, long long n_max,
                                                         const VerifyConfig& cfg = {}) {
    if (n_max < 0) throw std::invalid_argument("suite_theorem_1_2: n_max must be >= 0");
    auto [scalar, series] = theorem_1_2_rhs(k, p, n_max);
    std::vector<VerificationReport> out;

    {
        detail::Stopwatch sw;
        Rational lift = detail::factorial(k - 1) * zeta_even_positive(k).coefficient() /
                        int_pow(2, k - 1);
        if ((k / 2) & 1) lift = -lift;
        Rational assembled = scalar.coefficient * series.coeff(0);
        out.push_back(detail::exact_report(
            "thm-1-2/constant", {{"k", std::to_string(k)}, {"p", std::to_string(p)}},
            lift.to_string(), assembled.to_string(),
            tolerance_row("thm-1-2/constant").rationale, sw.ms()));
    }

    TruncationConfig tc = cfg.trunc;
    tc.a_max = cfg.a_max();
    for (long long n = 1; n <= n_max; ++n) {
        if (n % 4 > 1) continue;
        long long r = isqrt(n);
        if (r * r == n) {
            out.push_back(detail::cor_1_3_report("thm-1-2/square", k, p, n, cfg));
            continue;
        }
        detail::Stopwatch sw;
        TraceResult tr = real_trace_unfolded(k, p, n, tc);
        double rhs = scalar.coefficient.to_double() * series.coeff(n).to_double();
        auto rep = detail::numeric_report(
            "thm-1-2/nonsquare",
            {{"k", std::to_string(k)},
             {"p", std::to_string(p)},
             {"n", std::to_string(n)},
             {"a_max", std::to_string(tc.a_max)}},
            tr.value, rhs, resolved_tolerance(cfg, "thm-1-2/nonsquare"),
            tolerance_row("thm-1-2/nonsquare").rationale, sw.ms());
        rep.tail_bounds.emplace_back("a-series", tr.tail);
        out.push_back(rep);
    }
    return out;
}

// Negative discriminants -D: twice the stabilizer-weighted coset sum over the
// class points must match the closed zeta combination at +D.  The factor 2 was
// calibrated once on (p, D) = (3, 3) and is held fixed; it is recorded in the
// report parameters.
inline std::vector<VerificationReport> suite_cor_1_5(int k, long long p,
                                                     const std::vector<long long>& discs,
                                                     const VerifyConfig& cfg = {}) {
    if (k < 2 || (k & 1)) throw std::invalid_argument("suite_cor_1_5: k must be even, >= 2");
    if (p < 3 || (p & 1) == 0 || !detail::is_prime(p))
        throw std::invalid_argument("suite_cor_1_5: p must be an odd prime");
    std::vector<VerificationReport> out;
    TruncationConfig tc = cfg.trunc;
    tc.lattice_bound = cfg.lattice_bound();
    for (long long D : discs) {
        if (D < 1) throw std::invalid_argument("suite_cor_1_5: indices must be positive");
        detail::Stopwatch sw;
        long long md = ((-D) % 4 + 4) % 4;
        if (md == 2 || md == 3) {
            VerificationReport r;
            r.identity_id = "cor-1-5/skip";
            r.parameters = {{"k", std::to_string(k)},
                            {"p", std::to_string(p)},
                            {"D", std::to_string(D)}};
            r.lhs = "0";
            r.rhs = "0";
            r.tolerance_rationale =
                "no integral binary form has discriminant 2 or 3 mod 4; empty class set skipped";
            r.pass = true;
            r.runtime_ms = sw.ms();
            out.push_back(r);
            continue;
        }
        double base = imag_trace(k, p, -D, tc);
        double lhs = 2.0 * base;
        double tail_total = 0.0;
        for (const auto& hc : enumerate_heegner_classes(p, -D))
            tail_total += 2.0 * eval_F0(p, k, hc.point, tc).tail / hc.stabilizer_order;
        double pk = std::pow(static_cast<double>(p), -static_cast<double>(k));
        std::complex<double> S = pk * plus_zeta_closed(k, 1, D) +
                                 (1.0 - pk) * plus_zeta_closed(k, p, D);
        double sign = ((k / 2 - 1) & 1) ? -1.0 : 1.0;
        std::complex<double> rhs = sign * std::pow(2.0, k + 0.5) *
                                   std::polar(1.0, kPi * (k - 1.5) / 2.0) *
                                   zeta_even_positive(k).to_double() *
                                   std::pow(static_cast<double>(D), k / 2.0) * S;
        auto rep = detail::numeric_report(
            "cor-1-5/trace",
            {{"k", std::to_string(k)},
             {"p", std::to_string(p)},
             {"D", std::to_string(D)},
             {"lattice_bound", std::to_string(tc.lattice_bound)},
             {"doubling", "2"}},
            lhs, rhs, resolved_tolerance(cfg, "cor-1-5/trace"),
            tolerance_row("cor-1-5/trace").rationale, sw.ms());
        rep.tail_bounds.emplace_back("lattice-sum", tail_total);
        if (std::abs(rhs) < 1e-12) {
            // empty class set: both sides vanish and the closed side keeps only
            // rounding residue, so the deviation is judged absolutely
            rep.rel_error = rep.abs_error;
            rep.pass = rep.rel_error <= rep.tolerance;
        }
        out.push_back(rep);
    }
    return out;
}

// Constant-term identity at even weight and odd prime level: the weighted pair
// of zeta constants against the closed combination of plus-space values at 0.
inline std::vector<VerificationReport> suite_theorem_1_4_constant(int k, long long p,
                                                                  const VerifyConfig& cfg = {}) {
    if (k < 2 || (k & 1))
        throw std::invalid_argument("suite_theorem_1_4_constant: k must be even, >= 2");
    if (p < 3 || (p & 1) == 0 || !detail::is_prime(p))
        throw std::invalid_argument("suite_theorem_1_4_constant: p must be an odd prime");
    detail::Stopwatch sw;
    double pd = static_cast<double>(p);
    double lhs = kPi / (std::pow(2.0, k - 1) * std::sqrt(pd)) *
                 (std::pow(pd, k) * zeta_K_constants(p, k, ZetaKind::level_infty) +
                  zeta_K_constants(p, k, ZetaKind::modified));
    double pk = std::pow(pd, -static_cast<double>(k));
    std::complex<double> S0 = pk * plus_zeta_closed(k, 1, 0) +
                              (1.0 - pk) * plus_zeta_closed(k, p, 0);
    double sign = ((k / 2 - 1) & 1) ? -1.0 : 1.0;
    std::complex<double> rhs = sign * std::pow(4.0 * pd, k - 0.5) *
                               std::polar(std::pow(2.0, 1.5 - k), kPi * (k - 1.5) / 2.0) * kPi *
                               S0;
    auto rep = detail::numeric_report(
        "thm-1-4-const/identity", {{"k", std::to_string(k)}, {"p", std::to_string(p)}}, lhs, rhs,
        resolved_tolerance(cfg, "thm-1-4-const/identity"),
        tolerance_row("thm-1-4-const/identity").rationale, sw.ms());
    return {rep};
}

// ---------------------------------------------------------------------------
// Module primitives
// ---------------------------------------------------------------------------

namespace detail {

inline unsigned long long salted(unsigned long long seed, unsigned long long salt) {
    unsigned long long x = seed ^ (salt * 0x9e3779b97f4a7c15ULL);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    return x;
}

// deterministic bounded draw: plain modulo keeps results identical across
// platforms, bias is irrelevant at these ranges
inline long long draw(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

inline long long smallest_nonresidue(long long p) {
    for (long long q = 2; q < p; ++q)
        if (kronecker_symbol(q, p) == -1) return q;
    return 1;
}

}  // namespace detail

// Every module invariant in one seeded, reproducible pass: exact identities
// count violations, numeric ones record their worst deviation.
inline std::vector<VerificationReport> suite_primitives(const VerifyConfig& cfg = {}) {
    std::vector<VerificationReport> out;
    using detail::Params;

    // bernoulli-recurrence: sum_{j<=m} C(m+1,j) B_j = 0
    {
        detail::Stopwatch sw;
        long long bad = 0;
        for (unsigned m = 1; m <= 60; ++m) {
            Rational acc(0);
            for (unsigned j = 0; j <= m; ++j)
                acc += Rational(binomial(m + 1, j)) * bernoulli_number(j);
            if (!(acc == Rational(0))) ++bad;
        }
        out.push_back(detail::exact_aggregate("primitives/bernoulli-recurrence",
                                              {{"m_max", "60"}}, 60, bad,
                                              tolerance_row("primitives/bernoulli-recurrence").rationale,
                                              sw.ms()));
    }

    // zeta-bernoulli: zeta(1-2k) = -B_{2k}/(2k)
    {
        detail::Stopwatch sw;
        long long bad = 0;
        for (int k = 1; k <= 15; ++k)
            if (!(dirichlet_L_nonpositive(2 * k, 1) ==
                  -bernoulli_number(2 * k) / Rational(2 * k)))
                ++bad;
        out.push_back(detail::exact_aggregate("primitives/zeta-bernoulli", {{"k_max", "15"}}, 15,
                                              bad,
                                              tolerance_row("primitives/zeta-bernoulli").rationale,
                                              sw.ms()));
    }

    // zeta-even-numeric
    {
        detail::Stopwatch sw;
        double worst = 0.0;
        for (int k : {2, 4, 6, 8}) {
            double exact = zeta_even_positive(k).to_double();
            double numeric = dirichlet_L_numeric(k, 1, 1e-13);
            worst = std::max(worst, std::abs(exact - numeric) / std::abs(exact));
        }
        out.push_back(detail::numeric_aggregate(
            "primitives/zeta-even-numeric", {{"k_set", "2,4,6,8"}}, 4, worst,
            resolved_tolerance(cfg, "primitives/zeta-even-numeric"),
            tolerance_row("primitives/zeta-even-numeric").rationale, sw.ms()));
    }

    // exact-constants: the five frozen values
    {
        const char* rationale = tolerance_row("primitives/exact-constants").rationale;
        {
            detail::Stopwatch sw;
            out.push_back(detail::exact_report("primitives/exact-constants",
                                               {{"name", "zeta(-1)"}},
                                               dirichlet_L_nonpositive(2, 1).to_string(),
                                               Rational(-1, 12).to_string(), rationale, sw.ms()));
        }
        {
            detail::Stopwatch sw;
            out.push_back(detail::exact_report("primitives/exact-constants",
                                               {{"name", "zeta(-3)"}},
                                               dirichlet_L_nonpositive(4, 1).to_string(),
                                               Rational(1, 120).to_string(), rationale, sw.ms()));
        }
        {
            detail::Stopwatch sw;
            out.push_back(detail::exact_report(
                "primitives/exact-constants", {{"name", "zeta(2)"}},
                zeta_even_positive(2).to_string(),
                PiRational(Rational(1, 6), 2).to_string(), rationale, sw.ms()));
        }
        {
            detail::Stopwatch sw;
            out.push_back(detail::exact_report(
                "primitives/exact-constants", {{"name", "zeta(4)"}},
                zeta_even_positive(4).to_string(),
                PiRational(Rational(1, 90), 4).to_string(), rationale, sw.ms()));
        }
        {
            detail::Stopwatch sw;
            out.push_back(detail::exact_report("primitives/exact-constants",
                                               {{"name", "H(2,1,1;0)"}},
                                               hurwitz_class_number(2, 1, 1, 0).to_string(),
                                               Rational(1, 120).to_string(), rationale, sw.ms()));
        }
    }

    // rational-reduction: canonical form invariants on seeded inputs
    {
        detail::Stopwatch sw;
        std::mt19937_64 rng(detail::salted(cfg.seed, 11));
        long long bad = 0;
        const long long samples = 200;
        for (long long i = 0; i < samples; ++i) {
            long long a = detail::draw(rng, -1000000000LL, 1000000000LL);
            long long b = detail::draw(rng, 1, 1000000000LL);
            Rational r(a, b);
            if (r.den() <= 0) ++bad;
            else if (gcd(abs(r.num()), r.den()) != 1) ++bad;
            else if (!(r * Rational(b) == Rational(a))) ++bad;
        }
        out.push_back(detail::exact_aggregate(
            "primitives/rational-reduction", {{"samples", std::to_string(samples)}}, samples, bad,
            tolerance_row("primitives/rational-reduction").rationale, sw.ms()));
    }

    // kronecker-multiplicativity: exhaustive small box plus seeded wide box
    {
        detail::Stopwatch sw;
        long long bad = 0, checks = 0;
        for (long long m = -40; m <= 40; ++m)
            for (long long n1 = 1; n1 <= 40; ++n1)
                for (long long n2 = 1; n2 <= 40; ++n2) {
                    ++checks;
                    if (kronecker_symbol(m, n1 * n2) !=
                        kronecker_symbol(m, n1) * kronecker_symbol(m, n2))
                        ++bad;
                }
        for (long long a1 = -40; a1 <= 40; ++a1)
            for (long long a2 = -40; a2 <= 40; ++a2) {
                if (a1 == 0 || a2 == 0) continue;
                for (long long n : {1LL, 7LL, 12LL, 35LL}) {
                    ++checks;
                    if (kronecker_symbol(a1 * a2, n) !=
                        kronecker_symbol(a1, n) * kronecker_symbol(a2, n))
                        ++bad;
                }
            }
        std::mt19937_64 rng(detail::salted(cfg.seed, 13));
        for (int i = 0; i < 20000; ++i) {
            long long m = detail::draw(rng, -200, 200);
            long long n1 = detail::draw(rng, 1, 200), n2 = detail::draw(rng, 1, 200);
            ++checks;
            if (kronecker_symbol(m, n1 * n2) !=
                kronecker_symbol(m, n1) * kronecker_symbol(m, n2))
                ++bad;
            long long a1 = detail::draw(rng, -200, 200), a2 = detail::draw(rng, -200, 200);
            if (a1 && a2) {
                ++checks;
                if (kronecker_symbol(a1 * a2, n1) !=
                    kronecker_symbol(a1, n1) * kronecker_symbol(a2, n1))
                    ++bad;
            }
        }
        out.push_back(detail::exact_aggregate(
            "primitives/kronecker-multiplicativity", {{"box", "200"}}, checks, bad,
            tolerance_row("primitives/kronecker-multiplicativity").rationale, sw.ms()));
    }

    // level-sieve: sum_{d|N} mu(d) kron(d,c)^2 = [N | c] for squarefree N
    {
        detail::Stopwatch sw;
        long long bad = 0, checks = 0;
        for (long long N = 1; N <= 105; ++N) {
            if (!is_squarefree(N)) continue;
            for (long long c = 1; c <= 500; ++c) {
                long long s = 0;
                for (long long d : divisors(N)) {
                    int kr = kronecker_symbol(d, c);
                    s += moebius(d) * kr * kr;
                }
                ++checks;
                if (s != (c % N == 0 ? 1 : 0)) ++bad;
            }
        }
        out.push_back(detail::exact_aggregate("primitives/level-sieve",
                                              {{"N_max", "105"}, {"c_max", "500"}}, checks, bad,
                                              tolerance_row("primitives/level-sieve").rationale,
                                              sw.ms()));
    }

    // fundamental-roundtrip
    {
        detail::Stopwatch sw;
        long long bad = 0, checks = 0;
        for (long long d = -2000; d <= 2000; ++d) {
            if (d == 0) continue;
            ++checks;
            long long md = ((d % 4) + 4) % 4;
            auto dec = decompose_discriminant(d);
            if (md == 2 || md == 3) {
                if (dec) ++bad;
                continue;
            }
            if (!dec) {
                ++bad;
                continue;
            }
            if (dec->t * dec->m * dec->m != d) ++bad;
            else if (dec->t != 1 && !is_fundamental(dec->t)) ++bad;
        }
        for (int k : {2, 3})
            for (long long n = 1; n <= 500; ++n) {
                ++checks;
                auto dec = fundamental_decomposition(k, n);
                long long signed_n = (k & 1) ? -n : n;
                long long md = ((signed_n % 4) + 4) % 4;
                if (md == 2 || md == 3) {
                    if (dec) ++bad;
                } else if (!dec || dec->t * dec->m * dec->m != signed_n) {
                    ++bad;
                }
            }
        out.push_back(detail::exact_aggregate(
            "primitives/fundamental-roundtrip", {{"range", "2000"}}, checks, bad,
            tolerance_row("primitives/fundamental-roundtrip").rationale, sw.ms()));
    }

    // divisor-sigma-classical
    {
        detail::Stopwatch sw;
        long long bad = 0, checks = 0;
        for (long long r = 1; r <= 10000; ++r) {
            for (long long s : {1LL, 3LL}) {
                Int direct(0);
                for (long long d : divisors(r)) {
                    Int pw(1);
                    for (long long i = 0; i < s; ++i) pw *= d;
                    direct += pw;
                }
                ++checks;
                if (!(divisor_sigma(1, 1, s, r) == Rational(direct))) ++bad;
            }
        }
        out.push_back(detail::exact_aggregate(
            "primitives/divisor-sigma-classical", {{"r_max", "10000"}, {"s_set", "1,3"}}, checks,
            bad, tolerance_row("primitives/divisor-sigma-classical").rationale, sw.ms()));
    }

    // weight-periodicity: two_kappa and two_kappa + 4 share one code path
    {
        detail::Stopwatch sw;
        std::mt19937_64 rng(detail::salted(cfg.seed, 17));
        long long bad = 0;
        const long long samples = 200;
        for (long long i = 0; i < samples; ++i) {
            int tk = static_cast<int>(2 * detail::draw(rng, 0, 3) + 1);
            long long m = detail::draw(rng, -20, 20), n = detail::draw(rng, -20, 20);
            long long c = 4 * detail::draw(rng, 1, 50);
            if (half_integral_kloosterman(tk, m, n, c) !=
                half_integral_kloosterman(tk + 4, m, n, c))
                ++bad;
        }
        out.push_back(detail::exact_aggregate(
            "primitives/weight-periodicity", {{"samples", std::to_string(samples)}}, samples, bad,
            tolerance_row("primitives/weight-periodicity").rationale, sw.ms()));
    }

    // kloosterman-reflection: conjugation flips the weight class and both
    // arguments; the arguments may also be swapped in place
    {
        detail::Stopwatch sw;
        std::mt19937_64 rng(detail::salted(cfg.seed, 19));
        double worst = 0.0;
        const long long samples = 500;
        for (long long i = 0; i < samples; ++i) {
            int tk = static_cast<int>(2 * detail::draw(rng, 0, 3) + 1);
            long long m = detail::draw(rng, -20, 20), n = detail::draw(rng, -20, 20);
            long long c = 4 * detail::draw(rng, 1, 200);
            auto K = half_integral_kloosterman(tk, m, n, c);
            worst = std::max(worst, std::abs(std::conj(K) -
                                             half_integral_kloosterman(tk + 2, -m, -n, c)));
            worst = std::max(worst, std::abs(K - half_integral_kloosterman(tk, n, m, c)));
        }
        out.push_back(detail::numeric_aggregate(
            "primitives/kloosterman-reflection", {{"samples", std::to_string(samples)}},
            2 * samples, worst, resolved_tolerance(cfg, "primitives/kloosterman-reflection"),
            tolerance_row("primitives/kloosterman-reflection").rationale, sw.ms()));
    }

    // local-factor-vanishing: sums die past the 2-adic or p-adic cutoff
    {
        detail::Stopwatch sw;
        double worst = 0.0;
        long long checks = 0;
        for (int tk : {1, 3}) {
            for (long long p : {3LL, 5LL, 7LL}) {
                long long nqr = detail::smallest_nonresidue(p);
                for (long long core : {1LL, -1LL, nqr, -nqr}) {
                    for (int nu = 0; nu <= 3; ++nu) {
                        long long n = core;
                        for (int i = 0; i < nu; ++i) n *= p;
                        for (int j = nu + 2; j <= nu + 3; ++j) {
                            double q = std::pow(static_cast<double>(p), j);
                            worst = std::max(worst, std::abs(local_factor_direct(tk, p, j, n)) /
                                                        std::sqrt(q));
                            ++checks;
                        }
                    }
                }
            }
            for (long long core : {1LL, -1LL, 3LL, -3LL, 5LL, -5LL, 7LL, -7LL}) {
                for (int nu = 0; nu <= 3; ++nu) {
                    long long n = core << nu;
                    for (int j = nu + 4; j <= nu + 5; ++j) {
                        double q = std::pow(2.0, j);
                        worst = std::max(worst, std::abs(local_factor_direct(tk, 2, j, n)) /
                                                    std::sqrt(q));
                        ++checks;
                    }
                }
            }
        }
        out.push_back(detail::numeric_aggregate(
            "primitives/local-factor-vanishing", {{"nu_max", "3"}}, checks, worst,
            resolved_tolerance(cfg, "primitives/local-factor-vanishing"),
            tolerance_row("primitives/local-factor-vanishing").rationale, sw.ms()));
    }

    // local-factor-closed: scaled direct sums against the closed local factor,
    // every valuation and core class, one report per (p, k)
    {
        std::map<std::tuple<int, long long, int, long long>, std::complex<double>> direct_cache;
        auto scaled_sum = [&](int tk, long long p, long long n, int k) {
            int nu = padic_valuation(p, n);
            int j_lo = p == 2 ? 2 : 1;
            int j_hi = nu + (p == 2 ? 5 : 3);
            std::complex<double> acc(0.0, 0.0);
            for (int j = j_lo; j <= j_hi; ++j) {
                auto key = std::make_tuple(tk, p, j, n);
                auto it = direct_cache.find(key);
                if (it == direct_cache.end())
                    it = direct_cache.emplace(key, local_factor_direct(tk, p, j, n)).first;
                acc += it->second * std::pow(static_cast<double>(p), -j * (k + 0.5));
            }
            return acc;
        };
        for (long long p : {2LL, 3LL, 5LL, 7LL}) {
            for (int k : {2, 3, 4}) {
                detail::Stopwatch sw;
                int tk = (k & 1) ? 1 : 3;
                std::vector<long long> cores;
                if (p == 2)
                    cores = {1, -1, 3, -3, 5, -5, 7, -7};
                else {
                    long long nqr = detail::smallest_nonresidue(p);
                    cores = {1, -1, nqr, -nqr};
                }
                double worst = 0.0;
                long long checks = 0;
                for (long long core : cores) {
                    for (int nu = 0; nu <= 4; ++nu) {
                        long long n = core;
                        for (int i = 0; i < nu; ++i) n *= p;
                        std::complex<double> S = scaled_sum(tk, p, n, k);
                        std::complex<double> C = std::conj(local_factor_closed(k, p, -n));
                        worst = std::max(worst, std::abs(S - C));
                        ++checks;
                    }
                }
                out.push_back(detail::numeric_aggregate(
                    "primitives/local-factor-closed",
                    {{"p", std::to_string(p)}, {"k", std::to_string(k)}}, checks, worst,
                    resolved_tolerance(cfg, "primitives/local-factor-closed"),
                    tolerance_row("primitives/local-factor-closed").rationale, sw.ms()));
            }
        }
    }

    // ramanujan-zeta: exact level values against the Moebius/Euler resummation
    {
        detail::Stopwatch sw;
        double worst = 0.0;
        long long checks = 0;
        for (int k : {2, 3}) {
            for (long long N : {1LL, 3LL, 5LL, 15LL}) {
                for (long long n = 1; n <= 50; ++n) {
                    double lhs = zeta_K_level(N, n, k).to_double();
                    double rhs = 0.0;
                    for (long long d : divisors(N)) {
                        int mu = moebius(d);
                        if (!mu) continue;
                        double sig = 0.0;
                        for (long long e : divisors(n))
                            if (std::gcd(e, d) == 1)
                                sig += std::pow(static_cast<double>(e), 1.0 - 2.0 * k);
                        rhs += mu * sig / incomplete_L_numeric(2.0 * k, 1, d, 1e-14);
                    }
                    double denom = std::max(std::abs(rhs), 1e-30);
                    worst = std::max(worst, std::abs(lhs - rhs) / denom);
                    ++checks;
                }
            }
        }
        out.push_back(detail::numeric_aggregate(
            "primitives/ramanujan-zeta", {{"N_set", "1,3,5,15"}, {"n_max", "50"}}, checks, worst,
            resolved_tolerance(cfg, "primitives/ramanujan-zeta"),
            tolerance_row("primitives/ramanujan-zeta").rationale, sw.ms()));
    }

    // kohnen-per-a: weighted divisor sums of plus-space sums recover square
    // root counts, at +D for even weight index and at -D for odd
    {
        struct KohnenBlock {
            int k;
            long long a_max;
            long long count_sign;
            std::vector<long long> discs;
        };
        const KohnenBlock blocks[] = {
            {2, 300, 1, {1, 4, 5, 8, 9, 12, 13}},
            {3, 60, -1, {3, 4, 7, 8, 11, 12}},
        };
        for (const auto& blk : blocks) {
            detail::Stopwatch sw;
            long long bound = cfg.quick ? blk.a_max / 2 : blk.a_max;
            double worst = 0.0;
            long long checks = 0;
            for (long long D : blk.discs) {
                std::vector<double> kp(static_cast<size_t>(bound) + 1, 0.0);
                parallel_chunks(bound, [&](int, long long lo, long long hi) {
                    for (long long d = lo; d < hi; ++d)
                        kp[d + 1] = kohnen_plus_sum(blk.k, D, d + 1);
                });
                for (long long a = 1; a <= bound; ++a) {
                    double s = 0.0;
                    for (long long d : divisors(a))
                        s += std::sqrt(static_cast<double>(d)) * kp[d];
                    worst = std::max(worst, std::abs(s - static_cast<double>(sqrt_count(
                                                             a, blk.count_sign * D))));
                    ++checks;
                }
            }
            out.push_back(detail::numeric_aggregate(
                "primitives/kohnen-per-a",
                {{"k", std::to_string(blk.k)}, {"a_max", std::to_string(bound)}}, checks, worst,
                resolved_tolerance(cfg, "primitives/kohnen-per-a"),
                tolerance_row("primitives/kohnen-per-a").rationale, sw.ms()));
        }
    }

    // hurwitz-support: vanishing off the discriminant classes
    {
        detail::Stopwatch sw;
        long long bad = 0, checks = 0;
        for (int k : {2, 3}) {
            for (auto [ell, N] : {std::pair<long long, long long>{1, 1}, {1, 3}, {3, 3}}) {
                for (long long n = 0; n <= 200; ++n) {
                    long long v = (((k & 1) ? -n : n) % 4 + 4) % 4;
                    if (v < 2) continue;
                    ++checks;
                    if (!(hurwitz_class_number(k, ell, N, n) == Rational(0))) ++bad;
                }
            }
        }
        out.push_back(detail::exact_aggregate("primitives/hurwitz-support", {{"n_max", "200"}},
                                              checks, bad,
                                              tolerance_row("primitives/hurwitz-support").rationale,
                                              sw.ms()));
    }

    // hurwitz-anchors: frozen exact values
    {
        detail::Stopwatch sw;
        struct Anchor {
            int k;
            long long ell, N, n;
            Rational value;
        };
        const Anchor anchors[] = {
            {2, 1, 1, 4, Rational(-7, 12)},   {2, 3, 3, 4, Rational(7, 6)},
            {2, 1, 3, 4, Rational(-21, 40)},  {3, 1, 1, 3, Rational(-2, 9)},
            {2, 1, 1, 0, Rational(1, 120)},   {2, 1, 1, 5, Rational(-2, 5)},
        };
        long long bad = 0;
        for (const auto& a : anchors)
            if (!(hurwitz_class_number(a.k, a.ell, a.N, a.n) == a.value)) ++bad;
        out.push_back(detail::exact_aggregate("primitives/hurwitz-anchors", {}, 6, bad,
                                              tolerance_row("primitives/hurwitz-anchors").rationale,
                                              sw.ms()));
    }

    // combination-constant: constant term (2k-1)/3 at every level
    {
        detail::Stopwatch sw;
        long long bad = 0, checks = 0;
        for (int k : {2, 3, 4}) {
            for (long long N : {1LL, 3LL, 15LL}) {
                ++checks;
                if (!(theorem_1_1_combination(k, N, 0).coeff(0) == Rational(2 * k - 1, 3))) ++bad;
            }
        }
        out.push_back(detail::exact_aggregate(
            "primitives/combination-constant", {{"k_set", "2,3,4"}, {"N_set", "1,3,15"}}, checks,
            bad, tolerance_row("primitives/combination-constant").rationale, sw.ms()));
    }

    // xi-constants: the constant-term image scales by (1 - weight/2)
    {
        detail::Stopwatch sw;
        long long bad = 0;
        for (int k : {2, 3, 4, 5}) {
            HarmonicExpansion h;
            h.two_weight = 3 - 2 * k;
            h.c_minus[0] = SymTerm::from_rational(Rational(2));
            auto xi = xi_coefficients(h);
            auto it = xi.find(0);
            if (it == xi.end() || !it->second.scalar.exact ||
                !(it->second.scalar.re == Rational(2 * k - 1)) ||
                !(it->second.scalar.im == Rational(0)) ||
                !(it->second.pi_pow == Rational(0)) || !(it->second.n4_pow == Rational(0)))
                ++bad;
        }
        out.push_back(detail::exact_aggregate("primitives/xi-constants", {{"k_set", "2,3,4,5"}}, 4,
                                              bad, tolerance_row("primitives/xi-constants").rationale,
                                              sw.ms()));
    }

    // raise-scalar: frozen iterates
    {
        detail::Stopwatch sw;
        long long bad = 0;
        auto expect = [&](Rational kappa, Rational j, long long times, Rational s, Rational e) {
            auto [scalar, expnt] = raise_scalar(kappa, j, times);
            if (!(scalar == s) || !(expnt == e)) ++bad;
        };
        expect(Rational(1, 2), Rational(-1, 2), 1, Rational(0), Rational(-3, 2));
        expect(Rational(0), Rational(1), 1, Rational(1), Rational(0));
        expect(Rational(1, 2), Rational(1), 2, Rational(15, 4), Rational(-1));
        expect(Rational(3, 2), Rational(0), 3, Rational(105, 8), Rational(-3));
        out.push_back(detail::exact_aggregate("primitives/raise-scalar", {}, 4, bad,
                                              tolerance_row("primitives/raise-scalar").rationale,
                                              sw.ms()));
    }

    // eisenstein-collapse: level one reduces to the classical divisor sums
    {
        detail::Stopwatch sw;
        long long bad = 0, checks = 0;
        QSeries e4 = holomorphic_eisenstein_coefficients(2, 1, 50);
        QSeries e6 = holomorphic_eisenstein_coefficients(3, 1, 50);
        if (!(e4.coeff(0) == Rational(1))) ++bad;
        if (!(e6.coeff(0) == Rational(1))) ++bad;
        checks += 2;
        for (long long n = 1; n <= 50; ++n) {
            Int s3(0), s5(0);
            for (long long d : divisors(n)) {
                Int dd(d);
                s3 += dd * dd * dd;
                s5 += dd * dd * dd * dd * dd;
            }
            checks += 2;
            if (!(e4.coeff(n) == Rational(Int(240) * s3))) ++bad;
            if (!(e6.coeff(n) == Rational(Int(-504) * s5))) ++bad;
        }
        out.push_back(detail::exact_aggregate("primitives/eisenstein-collapse", {{"n_max", "50"}},
                                              checks, bad,
                                              tolerance_row("primitives/eisenstein-collapse").rationale,
                                              sw.ms()));
    }

    // combination-xi-bridge: the combination coefficients equal the image of
    // the plus-space expansion under the antiholomorphic differential
    {
        detail::Stopwatch sw;
        double worst = 0.0;
        long long checks = 0, bad_const = 0;
        for (int k : {2, 3}) {
            for (long long N : {1LL, 3LL, 15LL}) {
                QSeries combo = theorem_1_1_combination(k, N, 60);
                HarmonicExpansion h;
                h.two_weight = 3 - 2 * k;
                h.c_minus[0] = SymTerm::from_rational(Rational(2, 3));
                std::vector<long long> ns;
                for (long long n = 1; n <= 60; ++n) {
                    long long v = (((k & 1) ? -n : n) % 4 + 4) % 4;
                    if (v < 2) ns.push_back(n);
                }
                for (long long n : ns)
                    h.c_minus[-n] = SymTerm::from_numeric(
                        F_plus_coefficient(k, N, -n, PlusMode::closed));
                auto xi = xi_coefficients(h);
                ++checks;
                auto c0 = xi.find(0);
                if (c0 == xi.end() || !c0->second.scalar.exact ||
                    !(c0->second.scalar.re == combo.coeff(0)))
                    ++bad_const;
                for (long long n : ns) {
                    ++checks;
                    double target = combo.coeff(n).to_double();
                    auto it = xi.find(n);
                    std::complex<double> img =
                        it == xi.end() ? std::complex<double>(0.0, 0.0)
                                       : it->second.to_complex(n);
                    double denom = std::max(std::abs(target), 1e-30);
                    worst = std::max(worst, std::abs(img - target) / denom);
                }
            }
        }
        if (bad_const) worst = std::numeric_limits<double>::infinity();
        out.push_back(detail::numeric_aggregate(
            "primitives/combination-xi-bridge", {{"k_set", "2,3"}, {"N_set", "1,3,15"}, {"n_max", "60"}},
            checks, worst, resolved_tolerance(cfg, "primitives/combination-xi-bridge"),
            tolerance_row("primitives/combination-xi-bridge").rationale, sw.ms()));
    }

    // heegner-point: representatives satisfy their quadratic at the stored root
    {
        detail::Stopwatch sw;
        double worst = 0.0;
        long long checks = 0, bad = 0;
        struct Grid {
            long long N, D;
            long long count;     // frozen class count, -1 when not pinned
            int max_stab;
        };
        const Grid grid[] = {{1, -3, 1, 3}, {1, -4, 1, 2}, {1, -23, 3, 1},
                             {3, -12, -1, 1}, {5, -4, -1, 1}, {15, -11, -1, 1}};
        for (const auto& g : grid) {
            auto classes = enumerate_heegner_classes(g.N, g.D);
            if (g.count >= 0 && static_cast<long long>(classes.size()) != g.count) ++bad;
            if (classes.empty()) ++bad;
            for (const auto& hc : classes) {
                ++checks;
                const auto& f = hc.representative;
                if (f.a <= 0 || f.a % g.N != 0 || f.disc() != g.D || hc.stabilizer_order < 1) {
                    ++bad;
                    continue;
                }
                std::complex<double> tau = hc.point;
                std::complex<double> res = static_cast<double>(f.a) * tau * tau +
                                           static_cast<double>(f.b) * tau +
                                           static_cast<double>(f.c);
                worst = std::max(worst, std::abs(res));
            }
        }
        // the classical unit classes carry their extra automorphisms
        {
            auto c3 = enumerate_heegner_classes(1, -3);
            auto c4 = enumerate_heegner_classes(1, -4);
            if (c3.size() != 1 || c3[0].stabilizer_order != 3) ++bad;
            if (c4.size() != 1 || c4[0].stabilizer_order != 2) ++bad;
            checks += 2;
        }
        if (bad) worst = std::numeric_limits<double>::infinity();
        out.push_back(detail::numeric_aggregate(
            "primitives/heegner-point", {{"grids", "6"}}, checks, worst,
            resolved_tolerance(cfg, "primitives/heegner-point"),
            tolerance_row("primitives/heegner-point").rationale, sw.ms()));
    }

    // class-stability: enumeration is independent of the search bound
    {
        detail::Stopwatch sw;
        long long bad = 0, checks = 0;
        const std::pair<long long, long long> grid[] = {{1, -23}, {3, -12}, {3, -15}, {5, -24},
                                                        {15, -11}};
        for (auto [N, D] : grid) {
            long long s = isqrt(-D / 3);
            while (3 * s * s < -D) ++s;
            long long b1 = N * s + N;
            auto r1 = detail::enumerate_classes_bounded(N, D, std::nullopt, false, b1);
            auto r2 = detail::enumerate_classes_bounded(N, D, std::nullopt, false, b1 + 2 * N);
            ++checks;
            if (r1.size() != r2.size()) {
                ++bad;
                continue;
            }
            for (size_t i = 0; i < r1.size(); ++i)
                if (!(r1[i].representative == r2[i].representative)) ++bad;
        }
        out.push_back(detail::exact_aggregate("primitives/class-stability", {{"grids", "5"}},
                                              checks, bad,
                                              tolerance_row("primitives/class-stability").rationale,
                                              sw.ms()));
    }

    // equivalence-relation: level-group moves stay in class, classes separate
    {
        detail::Stopwatch sw;
        std::mt19937_64 rng(detail::salted(cfg.seed, 23));
        long long bad = 0, checks = 0;
        const std::pair<long long, long long> grid[] = {{1, -23}, {3, -23}, {5, -24}};
        for (auto [N, D] : grid) {
            auto classes = enumerate_heegner_classes(N, D);
            for (size_t i = 0; i < classes.size(); ++i)
                for (size_t j = i + 1; j < classes.size(); ++j) {
                    ++checks;
                    if (gamma0_equivalent(classes[i].representative, classes[j].representative, N))
                        ++bad;
                }
            auto random_gamma = [&]() {
                Mat2 m;
                for (int step = 0; step < 3; ++step) {
                    long long e = detail::draw(rng, -3, 3), f = detail::draw(rng, -2, 2);
                    m = m * Mat2{1, e, 0, 1} * Mat2{1, 0, N * f, 1};
                }
                return m;
            };
            for (int trial = 0; trial < 12; ++trial) {
                const QuadForm& q = classes[static_cast<size_t>(detail::draw(
                                                 rng, 0, static_cast<long long>(classes.size()) - 1))]
                                        .representative;
                QuadForm q1 = q.transformed(random_gamma());
                QuadForm q2 = q1.transformed(random_gamma());
                checks += 4;
                if (!gamma0_equivalent(q, q, N)) ++bad;
                if (!gamma0_equivalent(q, q1, N)) ++bad;
                if (!gamma0_equivalent(q1, q, N)) ++bad;
                if (!gamma0_equivalent(q, q2, N)) ++bad;
            }
        }
        out.push_back(detail::exact_aggregate(
            "primitives/equivalence-relation", {{"grids", "3"}}, checks, bad,
            tolerance_row("primitives/equivalence-relation").rationale, sw.ms()));
    }

    // sqrt-count-crt: multiplicative in coprime moduli
    {
        detail::Stopwatch sw;
        long long bad = 0, checks = 0;
        for (long long D : {-4LL, -3LL, 1LL, 5LL, 8LL, 9LL, 12LL, 13LL}) {
            for (long long a1 = 1; a1 <= 50; ++a1)
                for (long long a2 = a1 + 1; a2 <= 50; ++a2) {
                    if (std::gcd(a1, a2) != 1) continue;
                    ++checks;
                    if (sqrt_count(a1 * a2, D) != sqrt_count(a1, D) * sqrt_count(a2, D)) ++bad;
                }
        }
        out.push_back(detail::exact_aggregate("primitives/sqrt-count-crt",
                                              {{"a_max", "50"}}, checks, bad,
                                              tolerance_row("primitives/sqrt-count-crt").rationale,
                                              sw.ms()));
    }

    // sqrt-count-factored: sieve-driven counts match the exhaustive ones
    {
        detail::Stopwatch sw;
        long long bad = 0, checks = 0;
        auto spf = detail::spf_sieve(300);
        for (long long D : {1LL, 4LL, 5LL, 8LL, 9LL, 12LL, 13LL, 16LL, 17LL, 21LL, 24LL, 25LL,
                            28LL, 33LL, 40LL}) {
            for (long long a = 1; a <= 300; ++a) {
                ++checks;
                if (detail::sqrt_count_factored(a, D, spf) != sqrt_count(a, D)) ++bad;
            }
        }
        out.push_back(detail::exact_aggregate(
            "primitives/sqrt-count-factored", {{"a_max", "300"}, {"D_count", "15"}}, checks, bad,
            tolerance_row("primitives/sqrt-count-factored").rationale, sw.ms()));
    }

    // pell-automorph: frozen fundamental solutions, automorphs fix their form
    {
        detail::Stopwatch sw;
        long long bad = 0, checks = 0;
        const std::pair<long long, std::pair<long long, long long>> pells[] = {
            {5, {3, 1}}, {8, {6, 2}}, {12, {4, 1}}, {13, {11, 3}}, {17, {66, 16}}};
        for (const auto& [D, tu] : pells) {
            ++checks;
            if (pell_automorph(D) != tu) ++bad;
        }
        const QuadForm forms[] = {{1, 1, -1}, {1, 0, -2}, {1, 2, -2}, {3, 1, -1}};
        for (const auto& q : forms) {
            ++checks;
            Mat2 g = automorph_matrix(q);
            if (g.det() != 1 || !(q.transformed(g) == q)) ++bad;
        }
        out.push_back(detail::exact_aggregate("primitives/pell-automorph", {}, checks, bad,
                                              tolerance_row("primitives/pell-automorph").rationale,
                                              sw.ms()));
    }

    // lattice-moebius: coprime row sum against the full-lattice resummation
    {
        detail::Stopwatch sw;
        const long long B = cfg.lattice_bound();
        const int k = 2;
        auto full = [&](long long b) {
            double acc = 0.0;
            for (long long d = 1; d <= b; ++d) acc += std::pow(static_cast<double>(d), -2.0 * k);
            for (long long c = 1; c <= b; ++c) {
                double c2 = static_cast<double>(c) * static_cast<double>(c);
                for (long long d = -b; d <= b; ++d)
                    acc += std::pow(c2 + static_cast<double>(d) * static_cast<double>(d),
                                    -static_cast<double>(k));
            }
            return acc;
        };
        double oracle = 0.0;
        for (long long g = 1; g <= B; ++g) {
            int mu = moebius(g);
            if (!mu) continue;
            oracle += mu * std::pow(static_cast<double>(g), -2.0 * k) * full(B / g);
        }
        TruncationConfig tc = cfg.trunc;
        tc.lattice_bound = B;
        double value = eval_F0(1, k, {0.0, 1.0}, tc).value;
        out.push_back(detail::numeric_report(
            "primitives/lattice-moebius", {{"bound", std::to_string(B)}, {"k", "2"}}, value,
            oracle, resolved_tolerance(cfg, "primitives/lattice-moebius"),
            tolerance_row("primitives/lattice-moebius").rationale, sw.ms()));
    }

    // theta-integral: quadrature against the closed gamma ratio
    {
        detail::Stopwatch sw;
        double worst = 0.0;
        int points = cfg.quick ? 1024 : 2048;
        for (int k = 1; k <= 10; ++k) {
            double sign = (k & 1) ? -2.0 : 2.0;
            double closed = sign * sqrt_pi_gamma_ratio(k).to_double();
            worst = std::max(worst, std::abs(theta_integral_quadrature(k, points) - closed));
        }
        out.push_back(detail::numeric_aggregate(
            "primitives/theta-integral", {{"k_max", "10"}, {"points", std::to_string(points)}},
            10, worst, resolved_tolerance(cfg, "primitives/theta-integral"),
            tolerance_row("primitives/theta-integral").rationale, sw.ms()));
    }

    // incomplete-gamma: elementary value, recurrence, frozen references
    {
        detail::Stopwatch sw;
        double worst = 0.0;
        long long checks = 0;
        for (double x : {0.25, 0.5, 1.0, 2.0, 5.0, 10.0}) {
            double lhs = incomplete_gamma_upper(1.0, x), rhs = std::exp(-x);
            worst = std::max(worst, std::abs(lhs - rhs) / rhs);
            ++checks;
        }
        const std::pair<double, double> rec[] = {{0.5, 1.0}, {1.5, 2.0}, {0.5, 0.5},
                                                 {2.5, 3.0}, {1.5, 0.25}};
        for (auto [s, x] : rec) {
            double lhs = incomplete_gamma_upper(s + 1.0, x);
            double rhs = s * incomplete_gamma_upper(s, x) + std::pow(x, s) * std::exp(-x);
            worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
            ++checks;
        }
        const std::pair<std::pair<double, double>, double> frozen[] = {
            {{0.5, 1.0}, 0.2788055852806619765},
            {{1.5, 2.0}, 0.23171655200098069332},
            {{0.5, 0.25}, 0.84989183807993112979},
            {{2.5, 1.5}, 0.93051944278679239087}};
        for (const auto& [sx, ref] : frozen) {
            worst = std::max(worst,
                             std::abs(incomplete_gamma_upper(sx.first, sx.second) - ref) / ref);
            ++checks;
        }
        out.push_back(detail::numeric_aggregate(
            "primitives/incomplete-gamma", {}, checks, worst,
            resolved_tolerance(cfg, "primitives/incomplete-gamma"),
            tolerance_row("primitives/incomplete-gamma").rationale, sw.ms()));
    }

    // fplus-agreement: closed coefficients against one truncated sweep per level
    {
        detail::Stopwatch sw;
        const long long cmax = cfg.quick ? 1500 : 3000;
        double worst_ratio = 0.0;
        long long checks = 0;
        for (long long N : {1LL, 3LL}) {
            std::vector<PlusZetaRequest> reqs = {{3, 2}, {1, 3}};
            std::vector<long long> ns;
            for (long long n = -12; n <= 12; ++n)
                if (n) ns.push_back(n);
            auto batch = plus_zeta_direct_batch(N, ns, reqs, cmax);
            for (size_t q = 0; q < reqs.size(); ++q) {
                int k = reqs[q].k;
                for (size_t i = 0; i < ns.size(); ++i) {
                    long long n = ns[i];
                    long long sig = (k & 1) ? n : -n;
                    if ((sig % 4 + 4) % 4 > 1) continue;  // off the decomposition support
                    std::complex<double> closed = plus_zeta_closed(k, N, n);
                    ++checks;
                    worst_ratio = std::max(
                        worst_ratio, std::abs(closed - batch.values[q][i]) / batch.tails[q]);
                }
            }
        }
        // exercise the public truncated coefficient route once
        {
            TruncationConfig tc = cfg.trunc;
            tc.c_max = cmax;
            std::complex<double> dir = F_plus_coefficient(2, 1, -4, PlusMode::direct, tc);
            std::complex<double> clo = F_plus_coefficient(2, 1, -4, PlusMode::closed, tc);
            double tail = 2.0 * std::pow(4.0, -1.5) *
                          (std::pow(static_cast<double>(cmax), -0.5) / 0.5 +
                           std::pow(static_cast<double>(cmax), -1.5));
            double scale = (2.0 / 3.0) * std::pow(2.0, 1.5 - 2.0) * kPi / std::tgamma(1.5);
            ++checks;
            worst_ratio = std::max(worst_ratio, std::abs(dir - clo) / (tail * scale));
        }
        out.push_back(detail::numeric_aggregate(
            "primitives/fplus-agreement", {{"c_max", std::to_string(cmax)}, {"N_set", "1,3"}},
            checks, worst_ratio, resolved_tolerance(cfg, "primitives/fplus-agreement"),
            tolerance_row("primitives/fplus-agreement").rationale, sw.ms()));
    }

    // f0-invariance: fractional-linear moves inside the level group
    {
        detail::Stopwatch sw;
        TruncationConfig tc = cfg.trunc;
        tc.lattice_bound = cfg.lattice_bound();
        double worst_ratio = 0.0;
        long long checks = 0;
        struct Probe {
            long long N;
            int k;
            std::complex<double> tau;
        };
        const Probe probes[] = {{1, 2, {0.3, 0.9}}, {3, 2, {0.1, 0.7}}, {1, 3, {-0.2, 1.1}}};
        for (const auto& pr : probes) {
            TraceResult r0 = eval_F0(pr.N, pr.k, pr.tau, tc);
            TraceResult r1 = eval_F0(pr.N, pr.k, pr.tau + std::complex<double>(1.0, 0.0), tc);
            std::complex<double> moved =
                pr.tau / (static_cast<double>(pr.N) * pr.tau + 1.0);
            TraceResult r2 = eval_F0(pr.N, pr.k, moved, tc);
            worst_ratio = std::max(worst_ratio, std::abs(r0.value - r1.value) / (r0.tail + r1.tail));
            worst_ratio = std::max(worst_ratio, std::abs(r0.value - r2.value) / (r0.tail + r2.tail));
            checks += 2;
        }
        out.push_back(detail::numeric_aggregate(
            "primitives/f0-invariance",
            {{"lattice_bound", std::to_string(tc.lattice_bound)}}, checks, worst_ratio,
            resolved_tolerance(cfg, "primitives/f0-invariance"),
            tolerance_row("primitives/f0-invariance").rationale, sw.ms()));
    }

    return out;
}

}  // namespace hclass
