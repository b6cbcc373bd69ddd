#pragma once

#include <complex>
#include <vector>

#include "bergman/annulus.hpp"
#include "bergman/kernel_series.hpp"

namespace bergman {

// Constrained extremal levels over the truncated orthonormal Laurent basis
// e_n = z^n / |z^n|_{L^2},  n in [-N, N]:
//
//   j0 = sup |f(z0)|^2                    over the unit ball,
//   j1 = sup |f'(z0)|^2   with f(z0) = 0,
//   j2 = sup |f''(z0)|^2  with f(z0) = f'(z0) = 0.
//
// In coefficient space these are squared norms of the evaluation vector and
// of the derivative-evaluation vectors after orthogonal projection against
// the preceding ones, so the truncated suprema are attained exactly.
struct ExtremalResult {
    double j0, j1, j2;
    int basis_half_width;
    double residual_estimate;
};

namespace detail {

inline double poly_geom_tail(double x, int n) {
    // sum_{k>n} (k+1) x^k
    double p = std::pow(x, n + 1);
    return p * ((n + 2) - (n + 1) * x) / ((1 - x) * (1 - x));
}

} // namespace detail

inline ExtremalResult extremal_levels(const Annulus<double>& a, std::complex<double> z0, int N) {
    using C = std::complex<double>;
    require_inside(a, Cx<double>{z0.real(), z0.imag()}, "extremal_levels");
    if (N < 3)
        throw DegenerateConstraintError("extremal_levels: basis half-width must be >= 3");

    const int m = 2 * N + 1;
    std::vector<C> v(m), d(m), w(m); // value / first / second derivative of e_n at z0
    const double az = std::abs(z0), th = std::arg(z0), laz = std::log(az);
    for (int n = -N; n <= N; ++n) {
        int i = n + N;
        // e_n(z0) assembled in log scale: z0^n alone overflows for large |n|
        double mag = std::exp(n * laz - 0.5 * log_basis_norm(n, a));
        v[i] = std::polar(mag, n * th);
        d[i] = double(n) * v[i] / z0;
        w[i] = double(n) * double(n - 1) * v[i] / (z0 * z0);
    }

    auto dot = [&](const std::vector<C>& x, const std::vector<C>& y) {
        C s = 0;
        for (int i = 0; i < m; ++i) s += x[i] * std::conj(y[i]);
        return s;
    };

    ExtremalResult out;
    out.basis_half_width = N;
    double j0 = dot(v, v).real();
    out.j0 = j0;

    // Gram-Schmidt the constraint directions out of the objective vectors
    std::vector<C> d1 = d;
    C c = dot(d, v) / j0;
    for (int i = 0; i < m; ++i) d1[i] -= c * v[i];
    double j1 = dot(d1, d1).real();
    out.j1 = j1;

    std::vector<C> w1 = w;
    C c0 = dot(w, v) / j0;
    for (int i = 0; i < m; ++i) w1[i] -= c0 * v[i];
    C c1 = dot(w1, d1) / j1;
    for (int i = 0; i < m; ++i) w1[i] -= c1 * d1[i];
    out.j2 = dot(w1, w1).real();

    // evaluation-vector tail: |e_n(z0)|^2 decays geometrically on both sides
    double r2 = a.r * a.r;
    const double PI = pi_const<double>();
    out.residual_estimate =
        detail::poly_geom_tail(az * az, N) / (PI * (1 - r2))
        + detail::poly_geom_tail(r2 / (az * az), N) / (PI * r2 * (1 - r2));
    return out;
}

inline double extremal_j(int order, const Annulus<double>& a, std::complex<double> z0, int N) {
    if (order < 0 || order > 2)
        throw DomainError("extremal_j: order must be 0, 1 or 2");
    if (N < order + 1)
        throw DegenerateConstraintError("extremal_j: basis half-width too small for the constraints");
    ExtremalResult e = extremal_levels(a, z0, N < 3 ? 3 : N);
    return order == 0 ? e.j0 : order == 1 ? e.j1 : e.j2;
}

// Smallest N with (max(|z0|, r/|z0|))^{2N} < 1e-14 (1-|z0|)^4, capped at 5000.
inline int default_half_width(const Annulus<double>& a, std::complex<double> z0) {
    double az = std::abs(z0);
    double q = std::max(az, a.r / az);
    double target = 1e-14 * std::pow(1 - az, 4);
    int n = int(std::ceil(std::log(target) / (2 * std::log(q)))) + 1;
    if (n < 8) n = 8;
    if (n > 5000) n = 5000;
    return n;
}

// Curvature through the extremal levels: R = 2 - j0 j2 / j1^2, always < 2.
inline double curvature_extremal(const Annulus<double>& a, std::complex<double> z0, int N = 0) {
    if (N == 0) N = default_half_width(a, z0);
    ExtremalResult e = extremal_levels(a, z0, N);
    if (!(e.j0 > 0 && e.j1 > 0 && e.j2 > 0))
        throw DegenerateConstraintError("curvature_extremal: nonpositive extremal level");
    return 2.0 - e.j0 * e.j2 / (e.j1 * e.j1);
}

} // namespace bergman
