#pragma once

#include "kloosterman.hpp"

#include <algorithm>
#include <complex>
#include <optional>
#include <vector>

namespace hclass {

inline long long isqrt(long long n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative input");
    auto r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

struct Mat2 {
    long long p = 1, q = 0, r = 0, s = 1;  // [[p, q], [r, s]]
    friend Mat2 operator*(const Mat2& A, const Mat2& B) {
        return {A.p * B.p + A.q * B.r, A.p * B.q + A.q * B.s, A.r * B.p + A.s * B.r,
                A.r * B.q + A.s * B.s};
    }
    long long det() const { return p * s - q * r; }
    Mat2 inverse() const {
        if (det() != 1) throw std::invalid_argument("Mat2::inverse: determinant must be 1");
        return {s, -q, -r, p};
    }
};

struct QuadForm {
    long long a = 0, b = 0, c = 0;
    long long disc() const { return b * b - 4 * a * c; }
    long long eval(long long x, long long y) const { return a * x * x + b * x * y + c * y * y; }
    QuadForm transformed(const Mat2& m) const {
        return {eval(m.p, m.r), 2 * (a * m.p * m.q + c * m.r * m.s) + b * (m.p * m.s + m.q * m.r),
                eval(m.q, m.s)};
    }
    long long content() const {
        return std::gcd(std::gcd(a < 0 ? -a : a, b < 0 ? -b : b), c < 0 ? -c : c);
    }
    bool operator==(const QuadForm&) const = default;
};

// #{b mod 2a : b^2 = D mod 4a}, exhaustive.
inline long long sqrt_count(long long a, long long D) {
    if (a < 1) throw std::invalid_argument("sqrt_count: a must be positive");
    long long m = 4 * a, cnt = 0;
    for (long long b = 0; b < 2 * a; ++b) {
        long long v = (b * b - D) % m;
        if (v < 0) v += m;
        if (v == 0) ++cnt;
    }
    return cnt;
}

namespace detail {

// #{b mod 2^j : b^2 = D mod 2^j}
inline long long two_adic_square_roots(int j, long long D) {
    if (j <= 0) return 1;
    if (D == 0) return 1LL << (j / 2);
    int v = 0;
    long long core = D;
    while ((core & 1) == 0) {
        core >>= 1;
        ++v;
    }
    if (v >= j) return 1LL << (j / 2);
    if (v & 1) return 0;
    int jv = j - v;
    long long core8 = ((core % 8) + 8) % 8;
    long long base;
    if (jv == 1)
        base = 1;
    else if (jv == 2)
        base = core8 % 4 == 1 ? 2 : 0;
    else
        base = core8 == 1 ? 4 : 0;
    return base << (v / 2);
}

// #{b mod p^e : b^2 = D mod p^e} for odd prime p
inline long long odd_prime_square_roots(long long p, int e, long long D) {
    if (e <= 0) return 1;
    auto ppow = [&](int m) {
        long long r = 1;
        for (int i = 0; i < m; ++i) r *= p;
        return r;
    };
    if (D == 0) return ppow(e / 2);
    int v = 0;
    long long core = D;
    while (core % p == 0) {
        core /= p;
        ++v;
    }
    if (v >= e) return ppow(e / 2);
    if (v & 1) return 0;
    return (1 + kronecker_symbol(core, p)) * ppow(v / 2);
}

// sqrt_count via CRT over the factorization of a (spf covers a)
inline long long sqrt_count_factored(long long a, long long D, const std::vector<int32_t>& spf) {
    int e2 = 0;
    long long rest = a;
    while ((rest & 1) == 0) {
        rest >>= 1;
        ++e2;
    }
    long long total = two_adic_square_roots(e2 + 2, D) / 2;
    while (total && rest > 1) {
        long long p = spf[rest];
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        total *= odd_prime_square_roots(p, e, D);
    }
    return total;
}

}  // namespace detail

inline long long floor_div(long long x, long long y) {
    long long q = x / y, r = x % y;
    return r && (r < 0) != (y < 0) ? q - 1 : q;
}

// Classical reduction of a positive definite form, returning the reduced form and
// the determinant-1 transform g with Q composed with g equal to the reduced form.
inline std::pair<QuadForm, Mat2> sl2_reduce(const QuadForm& Q) {
    if (Q.disc() >= 0) throw std::invalid_argument("sl2_reduce: discriminant must be negative");
    if (Q.a <= 0) throw std::invalid_argument("sl2_reduce: form must be positive definite");
    QuadForm f = Q;
    Mat2 m;
    for (int guard = 0;; ++guard) {
        if (guard > 512) throw std::logic_error("sl2_reduce: reduction did not converge");
        if (f.c < f.a) {
            Mat2 s{0, -1, 1, 0};
            f = f.transformed(s);
            m = m * s;
            continue;
        }
        if (f.b > f.a || f.b <= -f.a) {
            Mat2 t{1, floor_div(f.a - f.b, 2 * f.a), 0, 1};
            f = f.transformed(t);
            m = m * t;
            continue;
        }
        if (f.b < 0 && f.b == -f.a) {
            Mat2 t{1, 1, 0, 1};
            f = f.transformed(t);
            m = m * t;
            continue;
        }
        if (f.b < 0 && f.a == f.c) {
            Mat2 s{0, -1, 1, 0};
            f = f.transformed(s);
            m = m * s;
            continue;
        }
        break;
    }
    return {f, m};
}

namespace detail {

// Full automorphism set of a reduced positive definite form: +-I, plus the extra
// units of the [a,0,a] and [a,a,a] shapes (shape is content-invariant).
inline std::vector<Mat2> reduced_automorphs(const QuadForm& f) {
    std::vector<Mat2> out{{1, 0, 0, 1}, {-1, 0, 0, -1}};
    if (f.b == 0 && f.a == f.c) {
        out.push_back({0, -1, 1, 0});
        out.push_back({0, 1, -1, 0});
    } else if (f.a == f.b && f.a == f.c) {
        out.push_back({0, -1, 1, 1});
        out.push_back({-1, -1, 1, 0});
        out.push_back({0, 1, -1, -1});
        out.push_back({1, 1, -1, 0});
    }
    return out;
}

}  // namespace detail

// True iff some determinant-1 transform with lower-left entry divisible by N maps
// Q1 to Q2.  Both forms definite with the same discriminant; negative definite
// pairs are negated jointly.
inline bool gamma0_equivalent(QuadForm q1, QuadForm q2, long long N) {
    if (N < 1) throw std::invalid_argument("gamma0_equivalent: N must be positive");
    if (q1.disc() != q2.disc())
        throw std::invalid_argument("gamma0_equivalent: discriminants differ");
    if (q1.disc() >= 0)
        throw std::invalid_argument("gamma0_equivalent: discriminant must be negative");
    if (q1.a < 0 && q2.a < 0) {
        q1 = {-q1.a, -q1.b, -q1.c};
        q2 = {-q2.a, -q2.b, -q2.c};
    } else if ((q1.a < 0) != (q2.a < 0)) {
        return false;
    }
    auto [r1, m1] = sl2_reduce(q1);
    auto [r2, m2] = sl2_reduce(q2);
    if (!(r1 == r2)) return false;
    Mat2 m2inv = m2.inverse();
    for (const Mat2& u : detail::reduced_automorphs(r1)) {
        Mat2 t = m1 * (u * m2inv);
        if (t.r % N == 0) return true;
    }
    return false;
}

struct HeegnerClass {
    QuadForm representative;
    int stabilizer_order = 1;
    std::complex<double> point;
};

namespace detail {

// Order of the projective stabilizer inside the level-N group: solutions (t, u) of
// t^2 - D0 u^2 = 4 over the primitive part, filtered by N | a0 u, halved.
inline int gamma0_stabilizer_order(const QuadForm& f, long long N) {
    long long g = f.content();
    long long a0 = f.a / g, b0 = f.b / g, c0 = f.c / g;
    long long D0 = b0 * b0 - 4 * a0 * c0;
    int cnt = 0;
    for (long long u = -1; u <= 1; ++u) {
        long long t2 = 4 + D0 * u * u;
        if (t2 < 0) continue;
        long long t = isqrt(t2);
        if (t * t != t2) continue;
        std::vector<long long> ts = t == 0 ? std::vector<long long>{0}
                                           : std::vector<long long>{t, -t};
        for (long long tt : ts) {
            if ((tt - b0 * u) % 2) continue;
            if ((a0 * u) % N == 0) ++cnt;
        }
    }
    return std::max(cnt / 2, 1);
}

inline std::vector<HeegnerClass> enumerate_classes_bounded(long long N, long long D,
                                                           std::optional<long long> h,
                                                           bool include_mirrors,
                                                           long long bound) {
    std::vector<QuadForm> reps;
    for (long long a = N; a <= bound; a += N) {
        for (long long b = -a + 1; b <= a; ++b) {
            if (h) {
                long long twoN = 2 * N;
                if (((b - *h) % twoN + twoN) % twoN != 0) continue;
            }
            long long num = b * b - D;
            if (num % (4 * a)) continue;
            QuadForm f{a, b, num / (4 * a)};
            bool dup = false;
            for (const auto& r : reps)
                if (gamma0_equivalent(r, f, N)) {
                    dup = true;
                    break;
                }
            if (!dup) reps.push_back(f);
        }
    }
    std::sort(reps.begin(), reps.end(), [](const QuadForm& x, const QuadForm& y) {
        return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
    });
    std::vector<HeegnerClass> out;
    for (const auto& f : reps) {
        double half = 2.0 * static_cast<double>(f.a);
        std::complex<double> tau(-static_cast<double>(f.b) / half,
                                 std::sqrt(static_cast<double>(-D)) / half);
        out.push_back({f, gamma0_stabilizer_order(f, N), tau});
    }
    if (include_mirrors) {
        size_t base = out.size();
        for (size_t i = 0; i < base; ++i) {
            const auto& hc = out[i];
            QuadForm neg{-hc.representative.a, -hc.representative.b, -hc.representative.c};
            out.push_back({neg, hc.stabilizer_order, hc.point});
        }
    }
    return out;
}

}  // namespace detail

// Complete duplicate-free class list of level-N forms of discriminant D < 0
// (optionally restricted to b = h mod 2N); positive definite representatives,
// mirrored forms appended only on request.
inline std::vector<HeegnerClass> enumerate_heegner_classes(long long N, long long D,
                                                           std::optional<long long> h = std::nullopt,
                                                           bool include_mirrors = false) {
    if (N < 1) throw std::invalid_argument("enumerate_heegner_classes: N must be positive");
    if (D >= 0) throw std::invalid_argument("enumerate_heegner_classes: D must be negative");
    long long md = ((D % 4) + 4) % 4;
    if (md == 2 || md == 3)
        throw std::invalid_argument("enumerate_heegner_classes: D must be 0 or 1 mod 4");
    long long s = isqrt(-D / 3);
    while (3 * s * s < -D) ++s;
    return detail::enumerate_classes_bounded(N, D, h, include_mirrors, N * s + N);
}

struct TruncationConfig {
    long long a_max = 50000;
    long long lattice_bound = 3000;
    long long c_max = 20000;
    double tol = 1e-9;
    bool report_tails = true;
};

struct TraceResult {
    double value = 0.0;
    double tail = 0.0;
};

// D^{k-1/2} (-1)^k sqrt(pi) Gamma(k) / (2^{2k-2} Gamma(k+1/2)) sum_{N|a} count(a, D)/a^k,
// truncated at a <= a_max; tail bounds the dropped terms via count <= 2 sqrt(a).
inline TraceResult real_trace_unfolded(int k, long long N, long long D,
                                       const TruncationConfig& cfg) {
    if (k < 2) throw std::invalid_argument("real_trace_unfolded: k must be at least 2");
    if (N < 1 || D < 1) throw std::invalid_argument("real_trace_unfolded: N, D must be positive");
    long long md = D % 4;
    if (md == 2 || md == 3) return {0.0, 0.0};
    auto spf = detail::spf_sieve(std::max<long long>(cfg.a_max, 3));
    long long terms = cfg.a_max / N;
    std::vector<double> partial(kParallelChunks, 0.0);
    parallel_chunks(terms, [&](int ci, long long lo, long long hi) {
        double acc = 0.0;
        for (long long i = lo; i < hi; ++i) {
            long long a = (i + 1) * N;
            long long cnt = detail::sqrt_count_factored(a, D, spf);
            if (cnt) acc += static_cast<double>(cnt) / std::pow(static_cast<double>(a), k);
        }
        partial[ci] = acc;
    });
    double sum = 0.0;
    for (double v : partial) sum += v;
    double pref = sqrt_pi_gamma_ratio(k).to_double() / std::pow(2.0, 2 * k - 2) *
                  std::pow(static_cast<double>(D), k - 0.5);
    if (k & 1) pref = -pref;
    double tail = 2.0 * std::pow(static_cast<double>(cfg.a_max), 1.5 - k) / (k - 1.5) *
                  std::pow(static_cast<double>(D), k - 0.5) / std::pow(2.0, 2 * k - 2);
    return {pref * sum, tail};
}

// Least (t, u), t, u > 0, with t^2 - D u^2 = 4.
inline std::pair<long long, long long> pell_automorph(long long D) {
    if (D <= 0) throw std::invalid_argument("pell_automorph: D must be positive");
    long long md = D % 4;
    if (md == 2 || md == 3) throw std::invalid_argument("pell_automorph: D must be 0 or 1 mod 4");
    long long r = isqrt(D);
    if (r * r == D) throw std::invalid_argument("pell_automorph: D must be non-square");
    for (long long u = 1; u <= 100000000; ++u) {
        long long t2 = 4 + D * u * u;
        long long t = isqrt(t2);
        if (t * t == t2) return {t, u};
    }
    throw std::runtime_error("pell_automorph: search bound exceeded");
}

// [[ (t-bu)/2, -cu ], [ au, (t+bu)/2 ]] for the least Pell solution of disc(Q).
inline Mat2 automorph_matrix(const QuadForm& Q) {
    auto [t, u] = pell_automorph(Q.disc());
    return {(t - Q.b * u) / 2, -Q.c * u, Q.a * u, (t + Q.b * u) / 2};
}

}  // namespace hclass
