#pragma once

#include "arith.hpp"
#include "bernoulli.hpp"

#include <cmath>

namespace hclass {

// Hurwitz zeta(s, x) for s > 1, 0 < x <= 1, by Euler-Maclaurin.
inline double hurwitz_zeta(double s, double x) {
    if (s <= 1.0) throw std::invalid_argument("hurwitz_zeta: s must exceed 1");
    if (x <= 0.0 || x > 1.0) throw std::invalid_argument("hurwitz_zeta: need 0 < x <= 1");
    constexpr int terms = 32, order = 10;
    double acc = 0.0;
    for (int j = 0; j < terms; ++j) acc += std::pow(x + j, -s);
    double base = x + terms;
    acc += std::pow(base, 1.0 - s) / (s - 1.0);
    acc += 0.5 * std::pow(base, -s);
    // correction sum: B_2r/(2r)! * s(s+1)...(s+2r-2) * base^(-s-2r+1)
    double power = std::pow(base, -s + 1.0) / (base * base);
    double fact = 1.0;
    for (int r = 1; r <= order; ++r) {
        fact *= (2.0 * r - 1.0) * (2.0 * r);
        double rising = 1.0;
        for (int i = 0; i < 2 * r - 1; ++i) rising *= s + i;
        acc += bernoulli_number(2 * r).to_double() / fact * rising * power;
        power /= base * base;
    }
    return acc;
}

inline double zeta_numeric(double s) { return hurwitz_zeta(s, 1.0); }

// L(s, chi_t) for s > 1 by f^(-s) sum_a chi_t(a) zeta(s, a/f).
inline double dirichlet_L_numeric(double s, long long t, double tol) {
    if (s <= 1.0) throw std::invalid_argument("dirichlet_L_numeric: s must exceed 1");
    if (tol <= 0.0) throw std::invalid_argument("dirichlet_L_numeric: tol must be positive");
    if (!is_fundamental(t))
        throw std::invalid_argument("dirichlet_L_numeric: t must be fundamental or 1");
    long long f = t == 1 ? 1 : (t < 0 ? -t : t);
    double acc = 0.0;
    for (long long a = 1; a <= f; ++a) {
        int chi = kronecker_symbol(t, a);
        if (chi == 0) continue;
        acc += chi * hurwitz_zeta(s, static_cast<double>(a) / f);
    }
    return acc * std::pow(static_cast<double>(f), -s);
}

// L_M(s, chi_t) = L(s, chi_t) * prod_{p | M} (1 - chi_t(p) p^(-s))
inline double incomplete_L_numeric(double s, long long t, long long M, double tol) {
    double v = dirichlet_L_numeric(s, t, tol);
    for (long long p : prime_factors(M))
        v *= 1.0 - kronecker_symbol(t, p) * std::pow(static_cast<double>(p), -s);
    return v;
}

// sqrt(pi) Gamma(k) / Gamma(k + 1/2) = 4^k k! (k-1)! / (2k)!  (exact)
inline Rational sqrt_pi_gamma_ratio(unsigned k) {
    if (k < 1) throw std::invalid_argument("sqrt_pi_gamma_ratio: k must be positive");
    Int num = 1;
    for (unsigned i = 1; i <= k; ++i) num *= i;
    Int num2 = num;
    num2 /= k;  // (k-1)!
    num *= num2;
    num <<= 2 * k;
    Int den = 1;
    for (unsigned i = 1; i <= 2 * k; ++i) den *= i;
    return Rational(num, den);
}

// Upper incomplete Gamma(s, x), x > 0: series below s+1, continued fraction above.
inline double incomplete_gamma_upper(double s, double x) {
    if (x <= 0.0) throw std::invalid_argument("incomplete_gamma_upper: x must be positive");
    if (x < s + 1.0) {
        // lower-gamma series, then subtract from Gamma(s)
        double term = 1.0 / s, sum = term, a = s;
        for (int i = 0; i < 500; ++i) {
            a += 1.0;
            term *= x / a;
            sum += term;
            if (std::fabs(term) < 1e-17 * std::fabs(sum)) break;
        }
        double lower = sum * std::exp(-x + s * std::log(x));
        return std::tgamma(s) - lower;
    }
    // Lentz continued fraction for x^s e^-x / (x+1-s- 1(1-s)/(x+3-s- ...))
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - s, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i < 500; ++i) {
        double an = -i * (i - s);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    return std::exp(-x + s * std::log(x)) * h;
}

}  // namespace hclass
