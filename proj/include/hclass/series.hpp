#pragma once

#include "arith.hpp"
#include "bernoulli.hpp"
#include "kloosterman.hpp"
#include "parallel.hpp"

#include <complex>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace hclass {

inline constexpr double kPi = 3.1415926535897932384626433832795;

// Finitely truncated q-expansion with exact rational coefficients.
struct QSeries {
    long long n_max = 0;
    std::map<long long, Rational> coefficients;

    Rational coeff(long long n) const {
        auto it = coefficients.find(n);
        return it == coefficients.end() ? Rational(0) : it->second;
    }
    void set(long long n, const Rational& v) {
        if (n < 0 || n > n_max) throw std::invalid_argument("QSeries: index out of range");
        if (v == Rational(0))
            coefficients.erase(n);
        else
            coefficients[n] = v;
    }
    QSeries& add_scaled(const QSeries& other, const Rational& scale) {
        for (const auto& [n, v] : other.coefficients)
            if (n <= n_max) set(n, coeff(n) + scale * v);
        return *this;
    }
    QSeries& scale(const Rational& s) {
        if (s == Rational(0)) {
            coefficients.clear();
            return *this;
        }
        for (auto& [n, v] : coefficients) v *= s;
        return *this;
    }
};

namespace detail {
struct HurwitzKey {
    int k;
    long long ell, N, n;
    bool operator<(const HurwitzKey& o) const {
        return std::tie(k, ell, N, n) < std::tie(o.k, o.ell, o.N, o.n);
    }
};

inline void validate_hurwitz_args(int k, long long ell, long long N) {
    if (k < 2) throw std::invalid_argument("hurwitz_class_number: k must exceed 1");
    if (N < 1 || (N & 1) == 0 || !is_squarefree(N))
        throw std::invalid_argument("hurwitz_class_number: N must be odd squarefree");
    if (ell < 1 || N % ell) throw std::invalid_argument("hurwitz_class_number: ell must divide N");
}

inline Rational hurwitz_compute(int k, long long ell, long long N, long long n) {
    if (n == 0) return ell == N ? incomplete_L_nonpositive(2 * k, 1, N) : Rational(0);
    auto dec = fundamental_decomposition(k, n);
    if (!dec) return Rational(0);
    long long t = dec->t, m = dec->m;
    Rational base = incomplete_L_nonpositive(k, t, ell);
    for (long long p : prime_factors(N / ell)) {
        Rational chi(kronecker_symbol(t, p));
        base *= (Rational(1) - chi * int_pow(p, -k)) / (Rational(1) - int_pow(p, -2 * k));
    }
    Rational asum(0);
    for (long long a : divisors(m)) {
        if (std::gcd(a, N) != 1) continue;
        int mu = moebius(a);
        if (!mu) continue;
        asum += Rational(mu * kronecker_symbol(t, a)) * int_pow(a, k - 1) *
                divisor_sigma(ell, N, 2 * k - 1, m / a);
    }
    return base * asum;
}
}  // namespace detail

// Exact generalized class number H_{k,ell,N}(n); 0 when no discriminant
// decomposition (-1)^k n = t m^2 exists, L_N(1-2k, id) at n = 0 on the full level.
inline Rational hurwitz_class_number(int k, long long ell, long long N, long long n) {
    detail::validate_hurwitz_args(k, ell, N);
    if (n < 0) throw std::invalid_argument("hurwitz_class_number: n must be non-negative");
    static std::map<detail::HurwitzKey, Rational> cache;
    static std::mutex mu;
    detail::HurwitzKey key{k, ell, N, n};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Rational val = detail::hurwitz_compute(k, ell, N, n);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(val)).first->second;
}

inline QSeries cohen_eisenstein_series(int k, long long ell, long long N, long long n_max) {
    detail::validate_hurwitz_args(k, ell, N);
    if (n_max < 0) throw std::invalid_argument("cohen_eisenstein_series: n_max must be >= 0");
    std::vector<Rational> vals(static_cast<size_t>(n_max) + 1);
    parallel_chunks(n_max + 1, [&](int, long long lo, long long hi) {
        for (long long n = lo; n < hi; ++n) vals[n] = hurwitz_class_number(k, ell, N, n);
    });
    QSeries out{n_max, {}};
    for (long long n = 0; n <= n_max; ++n) out.set(n, vals[n]);
    return out;
}

// Divisor-weighted combination (2k-1)/(3 zeta(1-2k)) sum_{ell | N}
//   prod_{p|ell} (1-p^{2k-1})^{-1} prod_{p|N/ell} (p-1)/(p^{2k}-p) H_{k,ell,N}.
inline QSeries theorem_1_1_combination(int k, long long N, long long n_max) {
    detail::validate_hurwitz_args(k, N, N);
    Rational front = Rational(2 * k - 1) / (Rational(3) * dirichlet_L_nonpositive(2 * k, 1));
    QSeries total{n_max, {}};
    for (long long ell : divisors(N)) {
        Rational w(1);
        for (long long p : prime_factors(ell)) w /= Rational(1) - int_pow(p, 2 * k - 1);
        for (long long p : prime_factors(N / ell))
            w *= Rational(p - 1) / (int_pow(p, 2 * k) - Rational(p));
        total.add_scaled(cohen_eisenstein_series(k, ell, N, n_max), w);
    }
    total.scale(front);
    return total;
}

// Exact rational multiple of an explicit square root, e.g. r * sqrt(p).
struct ScalarDescriptor {
    Rational coefficient;
    long long sqrt_of = 1;
    double to_double() const {
        return coefficient.to_double() * std::sqrt(static_cast<double>(sqrt_of));
    }
};

namespace detail {
inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline Rational factorial(long long n) {
    Int acc(1);
    for (long long i = 2; i <= n; ++i) acc *= i;
    return Rational(acc);
}
}  // namespace detail

// Prefactor (-1)^{k/2} sqrt(p) Gamma(k) zeta(k) / (2^{k-1} pi^k zeta(1-2k)) as an exact
// rational times sqrt(p), plus the weighted three-series combination it multiplies.
inline std::pair<ScalarDescriptor, QSeries> theorem_1_2_rhs(int k, long long p, long long n_max) {
    if (k < 2 || (k & 1)) throw std::invalid_argument("theorem_1_2_rhs: k must be even, >= 2");
    if (p < 3 || (p & 1) == 0 || !detail::is_prime(p))
        throw std::invalid_argument("theorem_1_2_rhs: p must be an odd prime");
    PiRational zk = zeta_even_positive(k);  // zeta(k) = coef * pi^k
    Rational pref = detail::factorial(k - 1) * zk.coefficient() /
                    (int_pow(2, k - 1) * dirichlet_L_nonpositive(2 * k, 1));
    if ((k / 2) & 1) pref = -pref;
    ScalarDescriptor scalar{pref, p};

    Rational pk = int_pow(p, -k);
    Rational beta = Rational(p - 1) / (int_pow(p, 2 * k) - Rational(p));
    QSeries out{n_max, {}};
    out.add_scaled(cohen_eisenstein_series(k, 1, 1, n_max), pk);
    out.add_scaled(cohen_eisenstein_series(k, 1, p, n_max), (Rational(1) - pk) * beta);
    out.add_scaled(cohen_eisenstein_series(k, p, p, n_max),
                   (Rational(1) - pk) / (Rational(1) - int_pow(p, 2 * k - 1)));
    return {scalar, out};
}

// E_{2k,N} coefficients: 1 + (2 zeta(2k)/zeta(1-2k)) K_N(0,n;2k) n^{2k-1}; the pi
// powers cancel exactly, leaving rationals.
inline QSeries holomorphic_eisenstein_coefficients(int k, long long N, long long n_max) {
    if (k < 2) throw std::invalid_argument("holomorphic_eisenstein_coefficients: k >= 2");
    if (N < 1 || !is_squarefree(N))
        throw std::invalid_argument("holomorphic_eisenstein_coefficients: N squarefree");
    if (n_max < 0) throw std::invalid_argument("holomorphic_eisenstein_coefficients: n_max >= 0");
    PiRational z2k = zeta_even_positive(2 * k);
    Rational two_over = Rational(2) / dirichlet_L_nonpositive(2 * k, 1);
    std::vector<Rational> vals(static_cast<size_t>(n_max) + 1);
    parallel_chunks(n_max, [&](int, long long lo, long long hi) {
        for (long long i = lo; i < hi; ++i) {
            long long n = i + 1;
            PiRational prod = z2k * zeta_K_level(N, n, k);
            if (prod.pi_exponent() != 0)
                throw std::logic_error("holomorphic_eisenstein_coefficients: pi power left over");
            vals[n] = two_over * prod.coefficient() * int_pow(n, 2 * k - 1);
        }
    });
    QSeries out{n_max, {}};
    out.set(0, Rational(1));
    for (long long n = 1; n <= n_max; ++n) out.set(n, vals[n]);
    return out;
}

// One Fourier coefficient, either exact (rational + rational*i times an integer pi
// power) or a raw numeric value when no exact form is tracked.
struct SymTerm {
    bool exact = true;
    Rational re{0}, im{0};
    int pi_pow = 0;
    std::complex<double> numeric{0.0, 0.0};

    static SymTerm from_rational(Rational r) {
        SymTerm t;
        t.re = std::move(r);
        return t;
    }
    static SymTerm from_numeric(std::complex<double> z) {
        SymTerm t;
        t.exact = false;
        t.numeric = z;
        return t;
    }
    bool is_zero() const {
        return exact ? re == Rational(0) && im == Rational(0)
                     : numeric == std::complex<double>(0.0, 0.0);
    }
    SymTerm conjugated() const {
        SymTerm t = *this;
        if (t.exact)
            t.im = -t.im;
        else
            t.numeric = std::conj(t.numeric);
        return t;
    }
    SymTerm scaled(const Rational& r) const {
        SymTerm t = *this;
        if (t.exact) {
            t.re *= r;
            t.im *= r;
        } else {
            t.numeric *= r.to_double();
        }
        return t;
    }
    std::complex<double> to_complex() const {
        if (!exact) return numeric;
        double pw = pi_pow ? std::pow(kPi, pi_pow) : 1.0;
        return {re.to_double() * pw, im.to_double() * pw};
    }
};

// Fourier data of a harmonic form of half-integral weight two_weight/2:
// a holomorphic part c_plus and a non-holomorphic part c_minus (indices <= 0
// carry the incomplete-Gamma profile, index 0 the v^{1-kappa} profile).
struct HarmonicExpansion {
    int two_weight = 0;
    std::map<long long, SymTerm> c_plus;
    std::map<long long, SymTerm> c_minus;
};

// One coefficient of the image under the antiholomorphic differential: the stored
// scalar times pi^pi_pow * (4n)^{n4_pow} with possibly half-integral exponents.
struct XiTerm {
    SymTerm scalar;
    Rational pi_pow{0};
    Rational n4_pow{0};
    std::complex<double> to_complex(long long n) const {
        std::complex<double> v = scalar.to_complex();
        if (!(pi_pow == Rational(0))) v *= std::pow(kPi, pi_pow.to_double());
        if (!(n4_pow == Rational(0))) v *= std::pow(4.0 * static_cast<double>(n), n4_pow.to_double());
        return v;
    }
};

// Weight kappa -> 2 - kappa: constant term (1-kappa) conj(c_minus(0)); index n > 0
// term -(4 pi n)^{1-kappa} conj(c_minus(-n)).  Holomorphic input maps to zero.
inline std::map<long long, XiTerm> xi_coefficients(const HarmonicExpansion& h) {
    std::map<long long, XiTerm> out;
    Rational kappa(h.two_weight, 2);
    Rational one_minus = Rational(1) - kappa;
    for (const auto& [idx, term] : h.c_minus) {
        if (term.is_zero()) continue;
        if (idx == 0) {
            out[0] = XiTerm{term.conjugated().scaled(one_minus), Rational(0), Rational(0)};
        } else if (idx < 0) {
            out[-idx] = XiTerm{term.conjugated().scaled(Rational(-1)), one_minus, one_minus};
        }
    }
    return out;
}

// Iterated raising applied to v^j: each step multiplies by (j + kappa), lowers the
// exponent by 1, and raises the weight by 2.  Returns (scalar, final exponent).
inline std::pair<Rational, Rational> raise_scalar(const Rational& kappa, const Rational& j,
                                                  long long times) {
    if (times < 1) throw std::invalid_argument("raise_scalar: times must be positive");
    Rational scalar(1), expnt = j, kap = kappa;
    for (long long i = 0; i < times; ++i) {
        scalar *= expnt + kap;
        expnt -= Rational(1);
        kap += Rational(2);
    }
    return {scalar, expnt};
}

}  // namespace hclass
