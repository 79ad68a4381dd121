#pragma once

#include "qform.hpp"
#include "series.hpp"

#include <complex>
#include <vector>

namespace hclass {

// Coset enumeration plan for the weight-k level-N Eisenstein lattice sum: rows
// c = N, 2N, ... paired with all d, gcd(c,d) = 1, (c,d) ~ (-c,-d); the identity
// coset contributes Im(tau)^k once.
struct LatticeSumPlan {
    long long N = 1;
    long long bound = 3000;
    bool include_identity_coset = true;
};

namespace detail {

inline void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2 * j + 1) * z * p1 - j * p2) / (j + 1);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
}

inline double lattice_rows_sum(const LatticeSumPlan& plan, int k, std::complex<double> tau) {
    double x = tau.real(), y = tau.imag();
    double yk = std::pow(y, k);
    long long rows = plan.bound / plan.N;
    std::vector<double> partial(kParallelChunks, 0.0);
    parallel_chunks(rows, [&](int ci, long long lo, long long hi) {
        double acc = 0.0;
        for (long long i = lo; i < hi; ++i) {
            long long c = (i + 1) * plan.N;
            double cy2 = static_cast<double>(c) * y;
            cy2 *= cy2;
            for (long long d = -plan.bound; d <= plan.bound; ++d) {
                if (std::gcd(c, d < 0 ? -d : d) != 1) continue;
                double u = static_cast<double>(c) * x + static_cast<double>(d);
                acc += yk / std::pow(u * u + cy2, k);
            }
        }
        partial[ci] = acc;
    });
    double sum = 0.0;
    for (double v : partial) sum += v;
    if (plan.include_identity_coset) sum += yk;
    return sum;
}

}  // namespace detail

// Truncated coset sum of Im(gamma tau)^k over lower rows (c,d), N | c, with an
// integral-comparison tail estimate.
inline TraceResult eval_F0(long long N, int k, std::complex<double> tau,
                           const TruncationConfig& cfg) {
    if (k < 2) throw std::invalid_argument("eval_F0: k must be at least 2");
    if (N < 1) throw std::invalid_argument("eval_F0: N must be positive");
    if (!(tau.imag() > 0)) throw std::invalid_argument("eval_F0: Im(tau) must be positive");
    LatticeSumPlan plan{N, cfg.lattice_bound, true};
    double value = detail::lattice_rows_sum(plan, k, tau);
    double y = tau.imag();
    double radius = static_cast<double>(cfg.lattice_bound) * std::min(1.0, y);
    double tail = kPi * std::pow(y, k - 1) * std::pow(radius, 2.0 - 2.0 * k) /
                  (static_cast<double>(N) * (2.0 * k - 2.0));
    return {value, tail};
}

// Partial q-expansion of the level-N holomorphic Eisenstein series at z.
inline std::complex<double> eval_E2k(long long N, int k, std::complex<double> z,
                                     long long n_max) {
    if (!(z.imag() > 0)) throw std::invalid_argument("eval_E2k: Im(z) must be positive");
    QSeries coeffs = holomorphic_eisenstein_coefficients(k, N, n_max);
    std::complex<double> q = std::exp(std::complex<double>(0.0, kTwoPi) * z);
    std::complex<double> acc(0.0, 0.0), qn(1.0, 0.0);
    long long at = 0;
    for (const auto& [n, v] : coeffs.coefficients) {
        while (at < n) {
            qn *= q;
            ++at;
        }
        acc += v.to_double() * qn;
    }
    return acc;
}

// Integral of (e^{2 i theta} - 1)^k / sin(theta) over (0, pi): composite
// Gauss-Legendre panels away from the endpoints plus series patches of width 1e-3
// (the integrand equals (2i)^k sin^{k-1} e^{ik theta}, so the patches integrate
// theta^{k-1} (1 + ik theta + c2 theta^2)).
inline std::complex<double> theta_integral_quadrature(int k, int n_points) {
    if (k < 1) throw std::invalid_argument("theta_integral_quadrature: k must be positive");
    const double eps = 1e-3;
    int per = 16;
    int panels = std::max(4, n_points / per);
    std::vector<double> xs, ws;
    detail::gauss_legendre(per, xs, ws);
    auto f = [&](double th) {
        std::complex<double> e(std::cos(2.0 * th) - 1.0, std::sin(2.0 * th));
        std::complex<double> p(1.0, 0.0);
        for (int i = 0; i < k; ++i) p *= e;
        return p / std::sin(th);
    };
    double lo = eps, hi = kPi - eps;
    std::complex<double> acc(0.0, 0.0);
    for (int pnl = 0; pnl < panels; ++pnl) {
        double a = lo + (hi - lo) * pnl / panels;
        double b = lo + (hi - lo) * (pnl + 1) / panels;
        double mid = 0.5 * (a + b), halfw = 0.5 * (b - a);
        std::complex<double> local(0.0, 0.0);
        for (int i = 0; i < per; ++i) local += ws[i] * f(mid + halfw * xs[i]);
        acc += halfw * local;
    }
    std::complex<double> two_i(0.0, 2.0), pw(1.0, 0.0);
    for (int i = 0; i < k; ++i) pw *= two_i;  // (2i)^k
    double c2 = -(k - 1) / 6.0 - k * k / 2.0;
    double e_k = std::pow(eps, k);
    std::complex<double> patch(e_k * eps * eps * c2 / (k + 2) + e_k / k,
                               e_k * eps * k / (k + 1.0));
    acc += pw * patch;            // left endpoint
    acc += std::conj(pw * patch);  // right endpoint: (-2i)^k conj(patch) = conj of the left
    return acc;
}

enum class PlusMode { closed, direct };

// Fourier coefficient of the weight-(3/2-k) plus-space form: zero off the support
// (-1)^{1-k} n = 0,1 mod 4, otherwise (2/3)(i/2)^{k-3/2} pi K+(0, n; k+1/2), with an
// extra 1/Gamma(k-1/2) on the non-holomorphic side n < 0.
inline std::complex<double> F_plus_coefficient(int k, long long N, long long n, PlusMode mode,
                                               const TruncationConfig& cfg = {}) {
    if (k < 2) throw std::invalid_argument("F_plus_coefficient: k must be at least 2");
    long long sgn = (k & 1) ? 1 : -1;  // (-1)^{1-k}
    long long v = ((sgn * n) % 4 + 4) % 4;
    if (v == 2 || v == 3) return {0.0, 0.0};
    int two_kappa = (k & 1) ? 1 : 3;
    std::complex<double> kz = mode == PlusMode::closed
                                  ? plus_zeta_closed(k, N, n)
                                  : plus_zeta_direct(two_kappa, N, n, k, cfg.c_max).value;
    std::complex<double> ipow = std::polar(std::pow(2.0, 1.5 - k), kPi * (k - 1.5) / 2.0);
    std::complex<double> out = (2.0 / 3.0) * ipow * kPi * kz;
    if (n < 0) out /= std::tgamma(k - 0.5);
    return out;
}

// Quadrature of E_{2k,N}(z) Q(z,1)^{k-1} dz along one fundamental arc of the
// geodesic semicircle of Q, from a base point to its image under the Pell automorph.
inline std::complex<double> cycle_integral_direct(int k, long long N, const QuadForm& Q,
                                                  const TruncationConfig& cfg) {
    if (k < 2) throw std::invalid_argument("cycle_integral_direct: k must be at least 2");
    long long D = Q.disc();
    if (D <= 0 || isqrt(D) * isqrt(D) == D)
        throw std::invalid_argument("cycle_integral_direct: discriminant must be positive non-square");
    if (Q.a == 0)
        throw std::invalid_argument("cycle_integral_direct: a must be nonzero (apply a transform first)");
    Mat2 g = automorph_matrix(Q);
    double ctr = -static_cast<double>(Q.b) / (2.0 * Q.a);
    double rad = std::sqrt(static_cast<double>(D)) / (2.0 * std::abs(static_cast<double>(Q.a)));
    double th0 = kPi / 2.0;
    std::complex<double> z0(ctr + rad * std::cos(th0), rad * std::sin(th0));
    std::complex<double> z1 =
        (static_cast<double>(g.p) * z0 + static_cast<double>(g.q)) /
        (static_cast<double>(g.r) * z0 + static_cast<double>(g.s));
    double th1 = std::atan2(z1.imag(), z1.real() - ctr);

    double vmin = rad * std::min(std::sin(th0), std::sin(th1));
    long long n_max = std::min<long long>(
        3000, static_cast<long long>(std::ceil(16.0 * 2.302585 / (kTwoPi * vmin))) + 25);
    QSeries coeffs = holomorphic_eisenstein_coefficients(k, N, n_max);
    auto eis = [&](std::complex<double> z) {
        std::complex<double> q = std::exp(std::complex<double>(0.0, kTwoPi) * z);
        std::complex<double> acc(0.0, 0.0), qn(1.0, 0.0);
        long long at = 0;
        for (const auto& [n, v] : coeffs.coefficients) {
            while (at < n) {
                qn *= q;
                ++at;
            }
            acc += v.to_double() * qn;
        }
        return acc;
    };
    double dq = static_cast<double>(D) / (4.0 * Q.a);
    auto integrand = [&](double th) {
        std::complex<double> eith = std::polar(1.0, th);
        std::complex<double> z = ctr + rad * eith;
        std::complex<double> qz = dq * (std::polar(1.0, 2.0 * th) - 1.0);  // Q(z, 1) on the arc
        std::complex<double> p(1.0, 0.0);
        for (int i = 0; i + 1 < k; ++i) p *= qz;
        return eis(z) * p * std::complex<double>(0.0, rad) * eith;  // dz = i r e^{i th} d th
    };
    int per = 16, panels = 64;
    std::vector<double> xs, ws;
    detail::gauss_legendre(per, xs, ws);
    std::complex<double> acc(0.0, 0.0);
    for (int pnl = 0; pnl < panels; ++pnl) {
        double a = th0 + (th1 - th0) * pnl / panels;
        double b = th0 + (th1 - th0) * (pnl + 1) / panels;
        double mid = 0.5 * (a + b), halfw = 0.5 * (b - a);
        std::complex<double> local(0.0, 0.0);
        for (int i = 0; i < per; ++i) local += ws[i] * integrand(mid + halfw * xs[i]);
        acc += halfw * local;
    }
    (void)cfg;
    return acc;
}

// Sum of eval_F0 over the level-N classes of discriminant D_lit < 0, weighted by
// inverse projective stabilizer orders.
inline double imag_trace(int k, long long N, long long D_lit, const TruncationConfig& cfg) {
    if (D_lit >= 0) throw std::invalid_argument("imag_trace: D_lit must be negative");
    double acc = 0.0;
    for (const auto& hc : enumerate_heegner_classes(N, D_lit))
        acc += eval_F0(N, k, hc.point, cfg).value / hc.stabilizer_order;
    return acc;
}

}  // namespace hclass
