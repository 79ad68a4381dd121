#pragma once

#include "arith.hpp"
#include "bernoulli.hpp"
#include "lnumeric.hpp"
#include "parallel.hpp"

#include <complex>
#include <numeric>
#include <vector>

namespace hclass {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

inline long long mod_inverse(long long a, long long c) {
    long long t = 0, nt = 1, r = c, nr = ((a % c) + c) % c;
    while (nr != 0) {
        long long q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (r != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
    return ((t % c) + c) % c;
}

// K_kappa(m, n; c) = sum_{r mod c, coprime} (c/r) eps_r^{2 kappa} e((m r* + n r)/c),
// with kappa = two_kappa/2 and 4 | c.  Depends on two_kappa mod 4 only.
inline std::complex<double> half_integral_kloosterman(int two_kappa, long long m, long long n,
                                                      long long c) {
    if (c < 4 || c % 4) throw std::invalid_argument("half_integral_kloosterman: need 4 | c");
    if ((two_kappa & 1) == 0)
        throw std::invalid_argument("half_integral_kloosterman: weight must be half-integral");
    bool plus_i = ((two_kappa % 4) + 4) % 4 == 1;  // eps_r^{2 kappa} = i vs -i at r = 3 mod 4
    long long mm = ((m % c) + c) % c, nn = ((n % c) + c) % c;
    std::complex<double> acc(0.0, 0.0);
    for (long long r = 1; r < c; r += 2) {
        if (std::gcd(r, c) != 1) continue;
        int w = kronecker_symbol(c, r);
        long long expo = nn * r % c;
        if (mm) expo = (expo + mm * mod_inverse(r, c)) % c;
        std::complex<double> ph = std::polar(1.0, kTwoPi * static_cast<double>(expo) / c);
        if ((r & 3) == 1)
            acc += static_cast<double>(w) * ph;
        else
            acc += std::complex<double>(0.0, plus_i ? w : -w) * ph;
    }
    return acc;
}

// Ramanujan sum c_c(n) = sum_{d | gcd(n,c)} d mu(c/d), exact.
inline long long ramanujan_sum(long long n, long long c) {
    if (c < 1) throw std::invalid_argument("ramanujan_sum: c must be positive");
    long long g = n == 0 ? c : std::gcd(n < 0 ? -n : n, c);
    long long acc = 0;
    for (long long d : divisors(g)) acc += d * moebius(c / d);
    return acc;
}

// S(m, n; c) = sum_{r mod c, coprime} e((m r* + n r)/c); exact integer path for m = 0.
inline std::complex<double> unit_kloosterman(long long m, long long n, long long c) {
    if (c < 1) throw std::invalid_argument("unit_kloosterman: c must be positive");
    if (m == 0) return {static_cast<double>(ramanujan_sum(n, c)), 0.0};
    if (n == 0) return {static_cast<double>(ramanujan_sum(m, c)), 0.0};
    long long mm = ((m % c) + c) % c, nn = ((n % c) + c) % c;
    std::complex<double> acc(0.0, 0.0);
    for (long long r = 1; r <= c; ++r) {
        if (std::gcd(r, c) != 1) continue;
        long long expo = (nn * r + mm * mod_inverse(r, c)) % c;
        acc += std::polar(1.0, kTwoPi * static_cast<double>(expo) / c);
    }
    return acc;
}

// Exact K_N(0, n; 2k) = N^{1-2k}/zeta(2k) prod_{p|N} (1-p^{-2k})^{-1}
//                       sum_{d|N, (N/d)|n} mu(d) d^{-1} sigma_{1-2k}(n d / N).
inline PiRational zeta_K_level(long long N, long long n, int k) {
    if (N < 1 || !is_squarefree(N)) throw std::invalid_argument("zeta_K_level: N must be squarefree");
    if (n < 1) throw std::invalid_argument("zeta_K_level: n must be positive");
    if (k < 2) throw std::invalid_argument("zeta_K_level: k must be at least 2");
    Rational r = int_pow(N, 1 - 2 * k);
    for (long long p : prime_factors(N)) r /= Rational(1) - int_pow(p, -2 * k);
    Rational dsum(0);
    for (long long d : divisors(N)) {
        if (n % (N / d)) continue;
        int mu = moebius(d);
        if (mu == 0) continue;
        dsum += Rational(mu, d) * divisor_sigma(1, 1, 1 - 2 * k, n * d / N);
    }
    return PiRational(r * dsum) / zeta_even_positive(2 * k);
}

enum class ZetaKind { level_infty, modified };

// K_N(0,0;2k) (level-infty) and K~_N(0,0;2k) (modified), via zeta(2k-1)/zeta(2k).
inline double zeta_K_constants(long long N, int k, ZetaKind which) {
    if (N < 1 || !is_squarefree(N))
        throw std::invalid_argument("zeta_K_constants: N must be squarefree");
    if (k < 2) throw std::invalid_argument("zeta_K_constants: k must be at least 2");
    double base = zeta_numeric(2.0 * k - 1.0) / zeta_even_positive(2 * k).to_double();
    auto euler = [&](long long ell) {
        double v = 1.0;
        for (long long p : prime_factors(ell)) {
            double pd = static_cast<double>(p);
            v *= (1.0 - std::pow(pd, 1.0 - 2.0 * k)) / (1.0 - std::pow(pd, -2.0 * k));
        }
        return v;
    };
    if (which == ZetaKind::modified) return base * euler(N);
    double sum = 0.0;
    for (long long ell : divisors(N)) sum += moebius(ell) * euler(ell);
    return base * sum;
}

// a_{1/2}, a_{3/2} local Gauss sums at modulus p^j by direct summation.
inline std::complex<double> local_factor_direct(int two_kappa, long long p, int j, long long n) {
    if (two_kappa != 1 && two_kappa != 3)
        throw std::invalid_argument("local_factor_direct: weight must be 1/2 or 3/2");
    if (j < 1) throw std::invalid_argument("local_factor_direct: j must be positive");
    long long q = 1;
    for (int i = 0; i < j; ++i) q *= p;
    long long nn = ((n % q) + q) % q;
    std::complex<double> acc(0.0, 0.0);
    if (p == 2) {
        bool inv = two_kappa == 3;  // eps_r^{-1} in the 3/2 case
        for (long long r = 1; r <= q; r += 2) {
            int w = kronecker_symbol(q, r);
            std::complex<double> e = epsilon_power(r, inv ? -1 : 1);
            acc += static_cast<double>(w) * e *
                   std::polar(1.0, kTwoPi * static_cast<double>(nn * r % q) / q);
        }
        return acc;
    }
    for (long long r = 1; r <= q; ++r) {
        int w = kronecker_symbol(r, q);
        if (!w) continue;
        acc += static_cast<double>(w) *
               std::polar(1.0, kTwoPi * static_cast<double>(nn * r % q) / q);
    }
    return epsilon_power(q, two_kappa == 1 ? -1 : 1) * acc;
}

// Closed-form local factor A_k(p, n); n = 0 gives the limit values.
// Branches depend on nu_p(n) and the core (-1)^k n / p^nu.
inline std::complex<double> local_factor_closed(int k, long long p, long long n) {
    if (k < 2) throw std::invalid_argument("local_factor_closed: k must be at least 2");
    if (p == 2) {
        std::complex<double> unit(1.0, (k & 1) ? -1.0 : 1.0);  // 1 + (-1)^k i
        Rational pre(Int(1), (Int(1) << (2 * k + 1)));
        if (n == 0) return unit / static_cast<double>((1LL << (2 * k + 1)) - 4);
        int nu = padic_valuation(2, n);
        long long core = ((k & 1) ? -n : n) >> nu;
        Rational x(Int(1), Int(1) << (2 * k - 1));  // 2^{1-2k}
        auto geo = [&](int mexp) { return (Rational(1) - x.pow(mexp)) / (Rational(1) - x); };
        Rational val;
        if (nu & 1) {
            int mexp = (nu - 1) / 2;
            val = geo(mexp) - x.pow(mexp);
        } else if (((core % 4) + 4) % 4 == 3) {
            int mexp = nu / 2;
            val = geo(mexp) - x.pow(mexp);
        } else {
            int mexp = nu / 2;
            Rational twist = Rational(1) + Rational(kronecker_symbol(core, 2)) * int_pow(2, 1 - k);
            val = geo(mexp) + x.pow(mexp) * twist;
        }
        return unit * (pre * val).to_double();
    }
    Rational beta(p - 1);
    beta /= Rational(p) * (int_pow(p, 2 * k - 1) - Rational(1));
    if (n == 0) return {beta.to_double(), 0.0};
    int nu = padic_valuation(p, n);
    long long pw = 1;
    for (int i = 0; i < nu; ++i) pw *= p;
    long long core = ((k & 1) ? -n : n) / pw;
    Rational y = int_pow(p, 1 - 2 * k);
    Rational val;
    if (nu & 1) {
        val = beta * (Rational(1) - y.pow((nu - 1) / 2)) - int_pow(p, (1 - 2 * k) * (nu + 1) / 2 - 1);
    } else {
        long long e2 = ((1 - 2 * k) * (nu + 1) - 1) / 2;
        val = beta * (Rational(1) - y.pow(nu / 2)) +
              Rational(kronecker_symbol(core, p)) * int_pow(p, e2);
    }
    return {val.to_double(), 0.0};
}

// a_kappa(4, n) in closed form (equals local_factor_direct(two_kappa, 2, 2, n)).
inline std::complex<double> a4_closed(int two_kappa, long long n) {
    long long r = ((n % 4) + 4) % 4;
    if (((two_kappa % 4) + 4) % 4 == 1)
        return (r == 0 || r == 1) ? std::complex<double>(1, 1) : std::complex<double>(-1, -1);
    return (r == 0 || r == 3) ? std::complex<double>(1, -1) : std::complex<double>(-1, 1);
}

struct PlusZetaRequest {
    int two_kappa;  // 1 or 3 mod 4
    int k;          // series evaluated at s = k + 1/2
};

struct PlusZetaBatchResult {
    std::vector<std::vector<std::complex<double>>> values;  // [request][index]
    std::vector<double> tails;                               // [request], trivial-bound tails
};

namespace detail {

inline std::vector<int32_t> spf_sieve(long long n) {
    std::vector<int32_t> spf(static_cast<size_t>(n) + 1, 0);
    for (long long i = 2; i <= n; ++i)
        if (spf[i] == 0)
            for (long long j = i; j <= n; j += i)
                if (spf[j] == 0) spf[j] = static_cast<int32_t>(i);
    return spf;
}

// chi[x] = Jacobi (x / modd) for 0 <= x < modd, built multiplicatively.
inline void jacobi_table(long long modd, const std::vector<int32_t>& spf,
                         std::vector<int8_t>& chi) {
    if (modd == 1) {
        chi.assign(1, 1);
        return;
    }
    chi.assign(static_cast<size_t>(modd), 0);
    chi[1] = 1;
    for (long long x = 2; x < modd; ++x) {
        long long p = spf[x], y = x / p;
        chi[x] = y == 1 ? static_cast<int8_t>(kronecker_symbol(x, modd))
                        : static_cast<int8_t>(chi[p] * chi[y]);
    }
}

// Accumulates A[j] = sum_{r=1(4)} (M/r) e(jr/M), B[j] = same over r=3(4), j = 0..maxj.
inline void kloosterman_banks(long long M, long long modd, const std::vector<int8_t>& chi,
                              int maxj, std::complex<double>* A, std::complex<double>* B) {
    int a2 = 0;
    long long m2 = M;
    while ((m2 & 1) == 0) {
        m2 >>= 1;
        ++a2;
    }
    const bool flip2 = a2 & 1;
    const bool modd3 = (modd & 3) == 3;
    const std::complex<double> step = std::polar(1.0, kTwoPi * 2.0 / static_cast<double>(M));
    std::complex<double> base = std::polar(1.0, kTwoPi / static_cast<double>(M));
    long long idx = 1 % modd;
    for (long long r = 1; r < M; r += 2) {
        if ((r & 8191) == 1)  // periodic resync against phase drift
            base = std::polar(1.0, kTwoPi * static_cast<double>(r) / static_cast<double>(M));
        int w = chi[idx];
        if (w) {
            if (modd3 && (r & 3) == 3) w = -w;
            if (flip2) {
                long long r8 = r & 7;
                if (r8 == 3 || r8 == 5) w = -w;
            }
            std::complex<double>* bank = (r & 3) == 1 ? A : B;
            std::complex<double> ph(static_cast<double>(w), 0.0);
            bank[0] += ph;
            for (int j = 1; j <= maxj; ++j) {
                ph *= base;
                bank[j] += ph;
            }
        }
        base *= step;
        idx += 2;
        while (idx >= modd) idx -= modd;  // modd = 1 needs both subtractions
    }
}

}  // namespace detail

// Truncated plus-space zeta sums sum_{c <= c_max} (1+(4/c)) (4Nc)^{-k-1/2} K_kappa(0, n; 4Nc)
// for several (kappa, k) pairs and several n at once; one pass over all moduli.
inline PlusZetaBatchResult plus_zeta_direct_batch(long long N, const std::vector<long long>& ns,
                                                  const std::vector<PlusZetaRequest>& reqs,
                                                  long long c_max) {
    if (N < 1) throw std::invalid_argument("plus_zeta_direct_batch: N must be positive");
    for (const auto& rq : reqs)
        if ((rq.two_kappa & 1) == 0 || rq.k < 2)
            throw std::invalid_argument("plus_zeta_direct_batch: bad request");
    PlusZetaBatchResult out;
    out.values.assign(reqs.size(), std::vector<std::complex<double>>(ns.size(), {0.0, 0.0}));
    out.tails.assign(reqs.size(), 0.0);
    for (size_t q = 0; q < reqs.size(); ++q) {
        double k = reqs[q].k;
        double fourN = 4.0 * static_cast<double>(N);
        // trivial bound |K| <= 4Nc: tail <= 2 (4N)^{1/2-k} sum_{c > c_max} c^{1/2-k}
        double s = k - 0.5;
        double tail;
        if (c_max >= 1)
            tail = 2.0 * std::pow(fourN, -s) *
                   (std::pow(static_cast<double>(c_max), 1.0 - s) / (s - 1.0) +
                    std::pow(static_cast<double>(c_max), -s));
        else
            tail = 2.0 * std::pow(fourN, -s) * zeta_numeric(s);
        out.tails[q] = tail;
    }
    if (c_max < 1 || ns.empty()) return out;

    int maxj = 0;
    for (long long n : ns) maxj = std::max<int>(maxj, static_cast<int>(n < 0 ? -n : n));
    long long modd_bound = N;
    while ((modd_bound & 1) == 0) modd_bound >>= 1;
    modd_bound *= c_max;
    auto spf = detail::spf_sieve(std::max<long long>(modd_bound, 3));

    // group moduli by the odd part of c so each Jacobi table is built once
    std::vector<long long> odds;
    for (long long o = 1; o <= c_max; o += 2) odds.push_back(o);
    std::vector<PlusZetaBatchResult> partial(kParallelChunks);
    parallel_chunks(static_cast<long long>(odds.size()), [&](int ci, long long lo, long long hi) {
        auto& part = partial[ci];
        part.values.assign(reqs.size(), std::vector<std::complex<double>>(ns.size(), {0.0, 0.0}));
        std::vector<int8_t> chi;
        std::vector<std::complex<double>> A(maxj + 1), B(maxj + 1);
        for (long long oi = lo; oi < hi; ++oi) {
            long long o = odds[oi];
            long long modd = N * o;
            while ((modd & 1) == 0) modd >>= 1;
            detail::jacobi_table(modd, spf, chi);
            for (long long c = o; c <= c_max; c *= 2) {
                long long M = 4 * N * c;
                std::fill(A.begin(), A.end(), std::complex<double>(0.0, 0.0));
                std::fill(B.begin(), B.end(), std::complex<double>(0.0, 0.0));
                detail::kloosterman_banks(M, modd, chi, maxj, A.data(), B.data());
                for (size_t q = 0; q < reqs.size(); ++q) {
                    bool plus_i = ((reqs[q].two_kappa % 4) + 4) % 4 == 1;
                    double coef = ((c & 1) ? 2.0 : 1.0) *
                                  std::pow(static_cast<double>(M), -(reqs[q].k + 0.5));
                    for (size_t i = 0; i < ns.size(); ++i) {
                        long long n = ns[i];
                        int j = static_cast<int>(n < 0 ? -n : n);
                        std::complex<double> Aj = A[j], Bj = B[j];
                        if (n < 0) {
                            Aj = std::conj(Aj);
                            Bj = std::conj(Bj);
                        }
                        std::complex<double> K =
                            plus_i ? Aj + std::complex<double>(0, 1) * Bj
                                   : Aj - std::complex<double>(0, 1) * Bj;
                        part.values[q][i] += coef * K;
                    }
                }
            }
        }
    });
    for (int ci = 0; ci < kParallelChunks; ++ci) {
        if (partial[ci].values.empty()) continue;
        for (size_t q = 0; q < reqs.size(); ++q)
            for (size_t i = 0; i < ns.size(); ++i) out.values[q][i] += partial[ci].values[q][i];
    }
    return out;
}

struct TailValue {
    std::complex<double> value;
    double tail;
};

inline TailValue plus_zeta_direct(int two_kappa, long long N, long long n, int k, long long c_max) {
    PlusZetaRequest rq{two_kappa, k};
    auto batch = plus_zeta_direct_batch(N, {n}, {rq}, c_max);
    return {batch.values[0][0], batch.tails[0]};
}

// Closed form for K+_{kappa,4N}(0, n; k+1/2) with kappa = 1/2 (k odd) or 3/2 (k even):
// decompose sigma n = t m^2 with sigma = +1 resp. -1, then combine incomplete L-values,
// the T-divisor sum, and the closed local factors.  Returns 0 when no decomposition
// exists; force_two_kappa overrides the parity pairing for exploratory use.
inline std::complex<double> plus_zeta_closed(int k, long long N, long long n,
                                             int force_two_kappa = 0) {
    if (k < 2) throw std::invalid_argument("plus_zeta_closed: k must be at least 2");
    if (N < 1 || (N & 1) == 0 || !is_squarefree(N))
        throw std::invalid_argument("plus_zeta_closed: N must be odd squarefree");
    int tk = force_two_kappa ? ((force_two_kappa % 4) + 4) % 4 : ((k & 1) ? 1 : 3);
    const double tol = 1e-14;
    double l_ratio;
    Rational tfac(1);
    long long t = 1;
    if (n == 0) {
        l_ratio = incomplete_L_numeric(2.0 * k - 1.0, 1, 4 * N, tol) /
                  incomplete_L_numeric(2.0 * k, 1, 4 * N, tol);
    } else {
        long long sigma = tk == 1 ? 1 : -1;
        auto dec = decompose_discriminant(sigma * n);
        if (!dec) return {0.0, 0.0};
        t = dec->t;
        tfac = t_sum(4 * N, 1 - k, t, dec->m);
        l_ratio = incomplete_L_numeric(static_cast<double>(k), t, 4 * N, tol) /
                  incomplete_L_numeric(2.0 * k, 1, 4 * N, tol);
    }
    std::complex<double> two_part =
        std::conj(local_factor_closed(k, 2, -n)) +
        a4_closed(tk, n) / std::pow(2.0, 2.0 * k + 1.0);
    std::complex<double> acc = l_ratio * tfac.to_double() * two_part;
    for (long long p : prime_factors(N)) acc *= local_factor_closed(k, p, -n);
    return acc;
}

// Kohnen plus-space sum K+_{k+1/2}(0, D; c) = (1-(-1)^k i)(1+(4/c)) K_{k+1/2}(0,D;4c)/(4c).
inline double kohnen_plus_sum(int k, long long D, long long c) {
    if (c < 1) throw std::invalid_argument("kohnen_plus_sum: c must be positive");
    std::complex<double> K = half_integral_kloosterman(2 * k + 1, 0, D, 4 * c);
    std::complex<double> u(1.0, (k & 1) ? 1.0 : -1.0);
    double weight = (c & 1) ? 2.0 : 1.0;  // 1 + (4/c)
    return (u * (weight / (4.0 * static_cast<double>(c))) * K).real();
}

}  // namespace hclass
