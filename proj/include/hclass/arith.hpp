#pragma once

#include "rational.hpp"

#include <algorithm>
#include <complex>
#include <numeric>
#include <optional>
#include <vector>

namespace hclass {

// Full Kronecker symbol (a/n), including n <= 0 and even n.
inline int kronecker_symbol(long long a, long long n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if ((a & 1) == 0 && (n & 1) == 0) return 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    int v = 0;
    while ((n & 1) == 0) {
        n >>= 1;
        ++v;
    }
    if (v & 1) {
        long long am = ((a % 8) + 8) % 8;
        if (am == 3 || am == 5) result = -result;
    }
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        v = 0;
        while ((a & 1) == 0) {
            a >>= 1;
            ++v;
        }
        if (v & 1) {
            long long nm = n % 8;
            if (nm == 3 || nm == 5) result = -result;
        }
        if ((a & 3) == 3 && (n & 3) == 3) result = -result;
        long long t = a;
        a = n % t;
        n = t;
    }
    return n == 1 ? result : 0;
}

// eps_d = 1 for d = 1 mod 4, i for d = 3 mod 4 (d odd).
inline std::complex<double> epsilon_factor(long long d) {
    if ((d & 1) == 0) throw std::invalid_argument("epsilon_factor: d must be odd");
    return (((d % 4) + 4) % 4 == 1) ? std::complex<double>(1, 0) : std::complex<double>(0, 1);
}

// eps_d^e, exact by residue of e mod 4.
inline std::complex<double> epsilon_power(long long d, long long e) {
    if ((d & 1) == 0) throw std::invalid_argument("epsilon_power: d must be odd");
    if (((d % 4) + 4) % 4 == 1) return {1, 0};
    switch (((e % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

inline int moebius(long long n) {
    if (n < 1) throw std::invalid_argument("moebius: n must be positive");
    int mu = 1;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

inline int padic_valuation(long long p, long long n) {
    if (n == 0) throw std::invalid_argument("padic_valuation: n = 0");
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

inline std::vector<long long> prime_factors(long long n) {
    std::vector<long long> ps;
    if (n < 0) n = -n;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        ps.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

inline std::vector<long long> divisors(long long n) {
    if (n < 1) throw std::invalid_argument("divisors: n must be positive");
    std::vector<long long> ds;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        ds.push_back(d);
        if (d != n / d) ds.push_back(n / d);
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

inline bool is_squarefree(long long n) {
    if (n < 0) n = -n;
    if (n == 0) return false;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) return false;
        while (n % p == 0) n /= p;
    }
    return true;
}

// x = s * f^2 with s squarefree carrying the sign of x.
inline std::pair<long long, long long> squarefree_decomposition(long long x) {
    if (x == 0) throw std::invalid_argument("squarefree_decomposition: x = 0");
    long long s = x < 0 ? -1 : 1, f = 1, n = x < 0 ? -x : x;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int v = 0;
        while (n % p == 0) {
            n /= p;
            ++v;
        }
        if (v & 1) s *= p;
        for (int i = 0; i < v / 2; ++i) f *= p;
    }
    s *= n;
    return {s, f};
}

// Fundamental discriminant, with t = 1 admitted as the trivial case.
inline bool is_fundamental(long long t) {
    if (t == 1) return true;
    long long r = ((t % 4) + 4) % 4;
    if (r == 1) return is_squarefree(t);
    if (r == 0) {
        long long u = t / 4;
        long long ur = ((u % 4) + 4) % 4;
        return (ur == 2 || ur == 3) && is_squarefree(u);
    }
    return false;
}

struct FundamentalDecomposition {
    long long t;  // fundamental discriminant or 1
    long long m;  // positive, t * m^2 recovers the input discriminant
};

// d = t*m^2 for a discriminant d (d = 0,1 mod 4), d nonzero.
inline std::optional<FundamentalDecomposition> decompose_discriminant(long long d) {
    if (d == 0) return std::nullopt;
    long long r = ((d % 4) + 4) % 4;
    if (r == 2 || r == 3) return std::nullopt;
    auto [s, f] = squarefree_decomposition(d);
    if (((s % 4) + 4) % 4 == 1) return FundamentalDecomposition{s, f};
    // s = 2,3 mod 4 forces f even since s*f^2 = 0,1 mod 4
    return FundamentalDecomposition{4 * s, f / 2};
}

// (-1)^k n = t m^2 when n is a discriminant up to the sign twist.
inline std::optional<FundamentalDecomposition> fundamental_decomposition(int k, long long n) {
    if (n < 1) throw std::invalid_argument("fundamental_decomposition: n must be positive");
    return decompose_discriminant((k & 1) ? -n : n);
}

// sum of d^s over d | r with gcd(d, ell) = 1 and gcd(r/d, N/ell) = 1
inline Rational divisor_sigma(long long ell, long long N, long long s, long long r) {
    if (ell < 1 || N < 1 || N % ell) throw std::invalid_argument("divisor_sigma: need ell | N");
    if (r < 1) throw std::invalid_argument("divisor_sigma: r must be positive");
    Rational total(0);
    long long cof = N / ell;
    for (long long d : divisors(r)) {
        if (std::gcd(d, ell) != 1) continue;
        if (std::gcd(r / d, cof) != 1) continue;
        total += int_pow(d, s);
    }
    return total;
}

// sum over 0 < d | m, gcd(d, 4N) = 1 of mu(d) chi_t(d) d^(s-1) sigma_{4N,2s-1}(m/d)
inline Rational t_sum(long long fourN, long long s, long long t, long long m) {
    if (fourN % 4) throw std::invalid_argument("t_sum: modulus must be divisible by 4");
    if (m < 1) throw std::invalid_argument("t_sum: m must be positive");
    Rational total(0);
    for (long long d : divisors(m)) {
        if (std::gcd(d, fourN) != 1) continue;
        int mu = moebius(d);
        if (mu == 0) continue;
        int chi = kronecker_symbol(t, d);
        if (chi == 0) continue;
        total += Rational(mu * chi) * int_pow(d, s - 1) * divisor_sigma(fourN, fourN, 2 * s - 1, m / d);
    }
    return total;
}

}  // namespace hclass
