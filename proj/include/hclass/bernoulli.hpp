#pragma once

#include "arith.hpp"
#include "rational.hpp"

#include <mutex>
#include <vector>

namespace hclass {

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

// B_m with B_1 = -1/2, from sum_{j<=m} C(m+1,j) B_j = 0.
inline Rational bernoulli_number(unsigned m) {
    static std::vector<Rational> cache{Rational(1)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= m) {
        unsigned j = static_cast<unsigned>(cache.size());
        Rational acc(0);
        for (unsigned i = 0; i < j; ++i) acc += Rational(binomial(j + 1, i)) * cache[i];
        cache.push_back(-acc / Rational(Int(j) + 1));
    }
    return cache[m];
}

// B_k(x) = sum_j C(k,j) B_j x^(k-j)
inline Rational bernoulli_poly(unsigned k, const Rational& x) {
    Rational acc(0);
    for (unsigned j = 0; j <= k; ++j)
        acc += Rational(binomial(k, j)) * bernoulli_number(j) * x.pow(k - j);
    return acc;
}

// B_{k,chi_t} = f^(k-1) sum_{a=1}^{f} chi_t(a) B_k(a/f), f = |t| (f = 1 for t = 1).
inline Rational generalized_bernoulli(unsigned k, long long t) {
    if (k < 1) throw std::invalid_argument("generalized_bernoulli: k must be positive");
    if (!is_fundamental(t))
        throw std::invalid_argument("generalized_bernoulli: t must be fundamental or 1");
    long long f = t == 1 ? 1 : (t < 0 ? -t : t);
    Rational acc(0);
    for (long long a = 1; a <= f; ++a) {
        int chi = kronecker_symbol(t, a);
        if (chi == 0) continue;
        acc += Rational(chi) * bernoulli_poly(k, Rational(a, f));
    }
    return int_pow(f, k - 1) * acc;
}

// L(1-k, chi_t) = -B_{k,chi_t}/k; equals zeta(1-k) for t = 1, k > 1.
inline Rational dirichlet_L_nonpositive(unsigned k, long long t) {
    return -generalized_bernoulli(k, t) / Rational(k);
}

// L_M(1-k, chi_t) = L(1-k, chi_t) * prod_{p | M} (1 - chi_t(p) p^(k-1))
inline Rational incomplete_L_nonpositive(unsigned k, long long t, long long M) {
    if (M < 1) throw std::invalid_argument("incomplete_L_nonpositive: M must be positive");
    Rational v = dirichlet_L_nonpositive(k, t);
    for (long long p : prime_factors(M))
        v *= Rational(1) - Rational(kronecker_symbol(t, p)) * int_pow(p, k - 1);
    return v;
}

// zeta(k) = (-1)^(k/2+1) B_k (2 pi)^k / (2 k!) for even k >= 2.
inline PiRational zeta_even_positive(unsigned k) {
    if (k < 2 || (k & 1)) throw std::invalid_argument("zeta_even_positive: k must be even, >= 2");
    Int fact = 1;
    for (unsigned i = 2; i <= k; ++i) fact *= i;
    Rational coef = bernoulli_number(k) * Rational(Int(1) << k, 2 * fact);
    if ((k / 2 + 1) & 1) coef = -coef;
    return PiRational(coef, static_cast<int>(k));
}

}  // namespace hclass
