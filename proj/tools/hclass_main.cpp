// hclass: command line front end for the class number series library.
//
// Subcommands:
//   hurwitz  exact H_{k,ell,N}(n) values for n = 0..nmax
//   series   q-expansion coefficients (cohen | theorem-1-1 | eisenstein)
//   zeta     half-integral weight Kloosterman zeta values (level | modified | plus)
//   trace    real- and imaginary-quadratic traces
//   verify   identity suites as JSON reports; exits 0 iff every check passes
//
// HCLASS_CONFIG may name a file of `key = value` lines mirroring the long
// option names (without dashes); explicit command line flags win.

#include "CLI11.hpp"

#include <hclass.hpp>

#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// `key = value` lines; '#' starts a comment; blank lines and lines without '='
// are ignored.
std::map<std::string, std::string> load_config_file() {
    std::map<std::string, std::string> out;
    const char* path = std::getenv("HCLASS_CONFIG");
    if (path == nullptr || *path == '\0') return out;
    std::ifstream in(path);
    if (!in) throw std::runtime_error(std::string("HCLASS_CONFIG file not readable: ") + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (!key.empty()) out[key] = val;
    }
    return out;
}

bool parse_bool(const std::string& s) {
    if (s == "1" || s == "true" || s == "yes" || s == "on") return true;
    if (s == "0" || s == "false" || s == "no" || s == "off") return false;
    throw std::invalid_argument("config: boolean expected, got '" + s + "'");
}

std::vector<long long> parse_list(const std::string& s) {
    std::vector<long long> out;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',' || ch == ' ' || ch == '\t') {
            if (!cur.empty()) out.push_back(std::stoll(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return out;
}

// Applies a config-file value to one option of the active subcommand, unless
// that option was given on the command line.
void absorb(CLI::App* cmd, const std::map<std::string, std::string>& file, const std::string& key,
            const std::function<void(const std::string&)>& apply) {
    auto it = file.find(key);
    if (it == file.end()) return;
    if (cmd->count("--" + key) > 0) return;
    apply(it->second);
}

void absorb_ll(CLI::App* cmd, const std::map<std::string, std::string>& f, const std::string& key,
               long long& var) {
    absorb(cmd, f, key, [&var](const std::string& v) { var = std::stoll(v); });
}

void absorb_int(CLI::App* cmd, const std::map<std::string, std::string>& f, const std::string& key,
                int& var) {
    absorb(cmd, f, key, [&var](const std::string& v) { var = static_cast<int>(std::stoll(v)); });
}

void absorb_str(CLI::App* cmd, const std::map<std::string, std::string>& f, const std::string& key,
                std::string& var) {
    absorb(cmd, f, key, [&var](const std::string& v) { var = v; });
}

void absorb_flag(CLI::App* cmd, const std::map<std::string, std::string>& f, const std::string& key,
                 bool& var) {
    absorb(cmd, f, key, [&var](const std::string& v) { var = parse_bool(v); });
}

void absorb_list(CLI::App* cmd, const std::map<std::string, std::string>& f, const std::string& key,
                 std::vector<long long>& var) {
    absorb(cmd, f, key, [&var](const std::string& v) { var = parse_list(v); });
}

// Exact rational rows, one per coefficient index.
void emit_series(const hclass::QSeries& s, const std::string& format) {
    if (format == "csv") {
        std::printf("n,numerator,denominator\n");
        for (long long n = 0; n <= s.n_max; ++n) {
            hclass::Rational v = s.coeff(n);
            std::printf("%lld,%s,%s\n", n, v.num().str().c_str(), v.den().str().c_str());
        }
        return;
    }
    std::string out = "[\n";
    for (long long n = 0; n <= s.n_max; ++n) {
        hclass::Rational v = s.coeff(n);
        out += "  {\"n\": \"" + std::to_string(n) + "\", \"numerator\": \"" + v.num().str() +
               "\", \"denominator\": \"" + v.den().str() + "\"}";
        out += n < s.n_max ? ",\n" : "\n";
    }
    out += "]\n";
    std::fputs(out.c_str(), stdout);
}

void emit_object(const std::vector<std::pair<std::string, std::string>>& fields) {
    std::string out = "{\n";
    for (size_t i = 0; i < fields.size(); ++i) {
        out += "  \"" + fields[i].first + "\": " + fields[i].second;
        out += i + 1 < fields.size() ? ",\n" : "\n";
    }
    out += "}\n";
    std::fputs(out.c_str(), stdout);
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"class number series, half-integral weight zeta values, traces, and checks"};
    app.require_subcommand(1);

    // hurwitz
    auto* hur = app.add_subcommand("hurwitz", "exact H_{k,ell,N}(n) for n = 0..nmax");
    int h_k = 2;
    long long h_ell = 1, h_level = 1, h_nmax = 30;
    std::string h_format = "csv";
    hur->add_option("--k", h_k, "weight parameter (series has weight k + 1/2)");
    hur->add_option("--ell", h_ell, "divisor of the level selecting the character");
    hur->add_option("--level", h_level, "odd squarefree level N");
    hur->add_option("--nmax", h_nmax, "largest index printed");
    hur->add_option("--format", h_format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));

    // series
    auto* ser = app.add_subcommand("series", "q-expansion coefficients");
    std::string s_kind = "cohen";
    int s_k = 2;
    long long s_ell = 1, s_level = 1, s_nmax = 30;
    std::string s_format = "csv";
    ser->add_option("--kind", s_kind,
                    "cohen: H_{k,ell,N} generating series; theorem-1-1: weighted combination "
                    "with its square-index terms; eisenstein: weight-2k holomorphic series")
        ->check(CLI::IsMember({"cohen", "theorem-1-1", "eisenstein"}));
    ser->add_option("--k", s_k, "weight parameter");
    ser->add_option("--ell", s_ell, "character divisor (cohen only)");
    ser->add_option("--level", s_level, "squarefree level N");
    ser->add_option("--nmax", s_nmax, "largest coefficient index");
    ser->add_option("--format", s_format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));

    // zeta
    auto* zet = app.add_subcommand("zeta", "half-integral weight Kloosterman zeta values");
    zet->require_subcommand(1);

    auto* zl = zet->add_subcommand(
        "level", "exact value at square index n > 0; numeric constant at n = 0");
    long long zl_level = 1, zl_n = 1;
    int zl_k = 2;
    zl->add_option("--level", zl_level, "squarefree level N");
    zl->add_option("--n", zl_n, "square index (0 selects the constant)");
    zl->add_option("--k", zl_k, "evaluation point s = k");

    auto* zm = zet->add_subcommand("modified", "numeric constant of the modified zeta");
    long long zm_level = 1;
    int zm_k = 2;
    zm->add_option("--level", zm_level, "squarefree level N");
    zm->add_option("--k", zm_k, "evaluation point s = k");

    auto* zp = zet->add_subcommand("plus", "plus-space zeta value at integer index n");
    int zp_k = 2;
    long long zp_level = 1, zp_n = 0, zp_cmax = 20000;
    std::string zp_mode = "closed";
    zp->add_option("--k", zp_k, "evaluation point s = k + 1/2");
    zp->add_option("--level", zp_level, "odd squarefree level N");
    zp->add_option("--n", zp_n, "index (may be negative)");
    zp->add_option("--mode", zp_mode, "closed: product formula; direct: truncated c-sum")
        ->check(CLI::IsMember({"closed", "direct"}));
    zp->add_option("--c-max", zp_cmax, "modulus cutoff for direct mode");

    // trace
    auto* tra = app.add_subcommand("trace", "quadratic-form traces");
    tra->require_subcommand(1);

    auto* tr = tra->add_subcommand("real", "positive-discriminant trace via the unfolded a-sum");
    int tr_k = 2;
    long long tr_level = 1, tr_disc = 5, tr_amax = 50000;
    tr->add_option("--k", tr_k, "weight parameter");
    tr->add_option("--level", tr_level, "level N");
    tr->add_option("--disc", tr_disc, "positive discriminant");
    tr->add_option("--a-max", tr_amax, "leading-coefficient cutoff");

    auto* ti = tra->add_subcommand("imag", "negative-discriminant trace over Heegner points");
    int ti_k = 2;
    long long ti_level = 1, ti_disc = -4, ti_lattice = 3000;
    ti->add_option("--k", ti_k, "weight parameter");
    ti->add_option("--level", ti_level, "level N");
    ti->add_option("--disc", ti_disc, "negative discriminant");
    ti->add_option("--lattice-bound", ti_lattice, "lattice-point cutoff for the evaluator");

    // verify
    auto* ver = app.add_subcommand("verify", "identity suites; exit 0 iff all checks pass");
    ver->require_subcommand(1);
    double v_tol = 0.0;
    bool v_tol_set = false;
    long long v_amax = 50000, v_cmax = 20000, v_lattice = 3000;
    unsigned long long v_seed = 1;
    bool v_quick = false, v_timings = false;
    std::string v_format = "json";
    ver->add_option("--tol", v_tol, "override every per-check tolerance");
    ver->add_option("--a-max", v_amax, "leading-coefficient cutoff");
    ver->add_option("--c-max", v_cmax, "modulus cutoff");
    ver->add_option("--lattice-bound", v_lattice, "lattice-point cutoff");
    ver->add_option("--seed", v_seed, "seed for the sampled families");
    ver->add_flag("--quick", v_quick, "halve cutoffs and relax fixed tolerances");
    ver->add_flag("--timings", v_timings, "record per-check runtimes in the reports");
    ver->add_option("--format", v_format, "output format")->check(CLI::IsMember({"json"}));

    auto* v11 = ver->add_subcommand("thm-1-1", "series-vs-zeta coefficient checks");
    int v11_k = 2;
    long long v11_level = 1, v11_nmax = 30;
    v11->add_option("--k", v11_k, "weight parameter");
    v11->add_option("--level", v11_level, "odd squarefree level N");
    v11->add_option("--nmax", v11_nmax, "largest index checked");
    v11->fallthrough();

    auto* v12 = ver->add_subcommand("thm-1-2", "combination-vs-trace checks");
    int v12_k = 2;
    long long v12_p = 3, v12_nmax = 40;
    v12->add_option("--k", v12_k, "even weight parameter");
    v12->add_option("--p", v12_p, "odd prime level");
    v12->add_option("--nmax", v12_nmax, "largest index checked");
    v12->fallthrough();

    auto* v13 = ver->add_subcommand("cor-1-3", "square-discriminant coefficient checks");
    int v13_k = 2;
    long long v13_p = 3;
    std::vector<long long> v13_discs = {1, 4, 9, 16, 25};
    v13->add_option("--k", v13_k, "even weight parameter");
    v13->add_option("--p", v13_p, "odd prime level");
    v13->add_option("--discs", v13_discs, "square discriminants to check")->delimiter(',');
    v13->fallthrough();

    auto* v15 = ver->add_subcommand("cor-1-5", "imaginary-quadratic trace checks");
    int v15_k = 2;
    long long v15_p = 3;
    std::vector<long long> v15_discs = {3, 4, 7, 8, 11};
    v15->add_option("--k", v15_k, "even weight parameter");
    v15->add_option("--p", v15_p, "odd prime level");
    v15->add_option("--discs", v15_discs, "positive literals D with -D the discriminant")
        ->delimiter(',');
    v15->fallthrough();

    auto* v14 = ver->add_subcommand("thm-1-4-const", "normalizing constant check");
    int v14_k = 2;
    long long v14_p = 3;
    v14->add_option("--k", v14_k, "even weight parameter");
    v14->add_option("--p", v14_p, "odd prime level");
    v14->fallthrough();

    auto* vpr = ver->add_subcommand("primitives", "low-level identity families");
    vpr->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        const auto file = load_config_file();

        if (hur->parsed()) {
            absorb_int(hur, file, "k", h_k);
            absorb_ll(hur, file, "ell", h_ell);
            absorb_ll(hur, file, "level", h_level);
            absorb_ll(hur, file, "nmax", h_nmax);
            absorb_str(hur, file, "format", h_format);
            emit_series(hclass::cohen_eisenstein_series(h_k, h_ell, h_level, h_nmax), h_format);
            return 0;
        }

        if (ser->parsed()) {
            absorb_str(ser, file, "kind", s_kind);
            absorb_int(ser, file, "k", s_k);
            absorb_ll(ser, file, "ell", s_ell);
            absorb_ll(ser, file, "level", s_level);
            absorb_ll(ser, file, "nmax", s_nmax);
            absorb_str(ser, file, "format", s_format);
            hclass::QSeries s;
            if (s_kind == "cohen")
                s = hclass::cohen_eisenstein_series(s_k, s_ell, s_level, s_nmax);
            else if (s_kind == "theorem-1-1")
                s = hclass::theorem_1_1_combination(s_k, s_level, s_nmax);
            else
                s = hclass::holomorphic_eisenstein_coefficients(s_k, s_level, s_nmax);
            emit_series(s, s_format);
            return 0;
        }

        if (zl->parsed()) {
            absorb_ll(zl, file, "level", zl_level);
            absorb_ll(zl, file, "n", zl_n);
            absorb_int(zl, file, "k", zl_k);
            if (zl_n == 0) {
                double c = hclass::zeta_K_constants(zl_level, zl_k, hclass::ZetaKind::level_infty);
                emit_object({{"kind", quoted("level-constant")},
                             {"level", quoted(std::to_string(zl_level))},
                             {"k", quoted(std::to_string(zl_k))},
                             {"n", quoted("0")},
                             {"value", hclass::detail::json_number(c)}});
            } else {
                hclass::PiRational v = hclass::zeta_K_level(zl_level, zl_n, zl_k);
                emit_object({{"kind", quoted("level")},
                             {"level", quoted(std::to_string(zl_level))},
                             {"k", quoted(std::to_string(zl_k))},
                             {"n", quoted(std::to_string(zl_n))},
                             {"value", quoted(v.to_string())},
                             {"numeric", hclass::detail::json_number(v.to_double())}});
            }
            return 0;
        }

        if (zm->parsed()) {
            absorb_ll(zm, file, "level", zm_level);
            absorb_int(zm, file, "k", zm_k);
            double c = hclass::zeta_K_constants(zm_level, zm_k, hclass::ZetaKind::modified);
            emit_object({{"kind", quoted("modified")},
                         {"level", quoted(std::to_string(zm_level))},
                         {"k", quoted(std::to_string(zm_k))},
                         {"value", hclass::detail::json_number(c)}});
            return 0;
        }

        if (zp->parsed()) {
            absorb_int(zp, file, "k", zp_k);
            absorb_ll(zp, file, "level", zp_level);
            absorb_ll(zp, file, "n", zp_n);
            absorb_str(zp, file, "mode", zp_mode);
            absorb_ll(zp, file, "c-max", zp_cmax);
            if (zp_mode == "closed") {
                std::complex<double> v = hclass::plus_zeta_closed(zp_k, zp_level, zp_n);
                emit_object({{"kind", quoted("plus")},
                             {"mode", quoted("closed")},
                             {"level", quoted(std::to_string(zp_level))},
                             {"k", quoted(std::to_string(zp_k))},
                             {"n", quoted(std::to_string(zp_n))},
                             {"value", quoted(hclass::detail::fmt_complex(v))}});
            } else {
                int tk = (zp_k & 1) ? 1 : 3;
                hclass::TailValue v =
                    hclass::plus_zeta_direct(tk, zp_level, zp_n, zp_k, zp_cmax);
                emit_object({{"kind", quoted("plus")},
                             {"mode", quoted("direct")},
                             {"level", quoted(std::to_string(zp_level))},
                             {"k", quoted(std::to_string(zp_k))},
                             {"n", quoted(std::to_string(zp_n))},
                             {"c_max", quoted(std::to_string(zp_cmax))},
                             {"value", quoted(hclass::detail::fmt_complex(v.value))},
                             {"tail", hclass::detail::json_number(v.tail)}});
            }
            return 0;
        }

        if (tr->parsed()) {
            absorb_int(tr, file, "k", tr_k);
            absorb_ll(tr, file, "level", tr_level);
            absorb_ll(tr, file, "disc", tr_disc);
            absorb_ll(tr, file, "a-max", tr_amax);
            hclass::TruncationConfig cfg;
            cfg.a_max = tr_amax;
            hclass::TraceResult res = hclass::real_trace_unfolded(tr_k, tr_level, tr_disc, cfg);
            emit_object({{"kind", quoted("real")},
                         {"k", quoted(std::to_string(tr_k))},
                         {"level", quoted(std::to_string(tr_level))},
                         {"disc", quoted(std::to_string(tr_disc))},
                         {"a_max", quoted(std::to_string(tr_amax))},
                         {"value", hclass::detail::json_number(res.value)},
                         {"tail", hclass::detail::json_number(res.tail)}});
            return 0;
        }

        if (ti->parsed()) {
            absorb_int(ti, file, "k", ti_k);
            absorb_ll(ti, file, "level", ti_level);
            absorb_ll(ti, file, "disc", ti_disc);
            absorb_ll(ti, file, "lattice-bound", ti_lattice);
            hclass::TruncationConfig cfg;
            cfg.lattice_bound = ti_lattice;
            double v = hclass::imag_trace(ti_k, ti_level, ti_disc, cfg);
            emit_object({{"kind", quoted("imag")},
                         {"k", quoted(std::to_string(ti_k))},
                         {"level", quoted(std::to_string(ti_level))},
                         {"disc", quoted(std::to_string(ti_disc))},
                         {"lattice_bound", quoted(std::to_string(ti_lattice))},
                         {"value", hclass::detail::json_number(v)}});
            return 0;
        }

        if (ver->parsed()) {
            v_tol_set = ver->count("--tol") > 0;
            absorb(ver, file, "tol", [&](const std::string& v) {
                v_tol = std::stod(v);
                v_tol_set = true;
            });
            absorb_ll(ver, file, "a-max", v_amax);
            absorb_ll(ver, file, "c-max", v_cmax);
            absorb_ll(ver, file, "lattice-bound", v_lattice);
            absorb(ver, file, "seed",
                   [&v_seed](const std::string& v) { v_seed = std::stoull(v); });
            absorb_flag(ver, file, "quick", v_quick);
            absorb_flag(ver, file, "timings", v_timings);
            absorb_str(ver, file, "format", v_format);

            hclass::VerifyConfig cfg;
            cfg.trunc.a_max = v_amax;
            cfg.trunc.c_max = v_cmax;
            cfg.trunc.lattice_bound = v_lattice;
            if (v_tol_set) cfg.tol_override = v_tol;
            cfg.seed = v_seed;
            cfg.quick = v_quick;

            std::vector<hclass::VerificationReport> reports;
            if (v11->parsed()) {
                absorb_int(v11, file, "k", v11_k);
                absorb_ll(v11, file, "level", v11_level);
                absorb_ll(v11, file, "nmax", v11_nmax);
                reports = hclass::suite_theorem_1_1(v11_k, v11_level, v11_nmax, cfg);
            } else if (v12->parsed()) {
                absorb_int(v12, file, "k", v12_k);
                absorb_ll(v12, file, "p", v12_p);
                absorb_ll(v12, file, "nmax", v12_nmax);
                reports = hclass::suite_theorem_1_2(v12_k, v12_p, v12_nmax, cfg);
            } else if (v13->parsed()) {
                absorb_int(v13, file, "k", v13_k);
                absorb_ll(v13, file, "p", v13_p);
                absorb_list(v13, file, "discs", v13_discs);
                reports = hclass::suite_cor_1_3(v13_k, v13_p, v13_discs, cfg);
            } else if (v15->parsed()) {
                absorb_int(v15, file, "k", v15_k);
                absorb_ll(v15, file, "p", v15_p);
                absorb_list(v15, file, "discs", v15_discs);
                reports = hclass::suite_cor_1_5(v15_k, v15_p, v15_discs, cfg);
            } else if (v14->parsed()) {
                absorb_int(v14, file, "k", v14_k);
                absorb_ll(v14, file, "p", v14_p);
                reports = hclass::suite_theorem_1_4_constant(v14_k, v14_p, cfg);
            } else {
                reports = hclass::suite_primitives(cfg);
            }

            hclass::canonical_sort(reports);
            std::string json = hclass::reports_to_json(reports, v_timings);
            std::fputs(json.c_str(), stdout);
            bool all = true;
            for (const auto& r : reports) all = all && r.pass;
            return all ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
