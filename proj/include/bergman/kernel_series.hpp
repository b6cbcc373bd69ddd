#pragma once

#include <array>
#include <string>

#include "bergman/annulus.hpp"

namespace bergman {

// Diagonal Bergman kernel of the annulus { r < |z| < 1 } together with its
// mixed Wirtinger derivatives up to order (2,2), all evaluated at one point.
//
// With t = |z|^2, L = log(r^2), p = r^{2+2j}, q = r^{2j} the kernel is
//
//   K = -1/(pi t L) + (1/pi) sum_{j>=0} [ p/(t-p)^2 + q/(1-qt)^2 ],
//
// and each derivative entry keeps the same shape: an explicit singular term
// plus a series whose j-th term decays like r^{2j}. The singular terms are
// added exactly, outside the truncated sums.
template <class R>
struct KernelJet {
    Cx<R> e[3][3];     // e[a][b] = d^{a+b} K / dz^a dzbar^b
    R condition;       // magnification of the widest j=0 denominators
    R tail_bound;      // certified bound on the truncation error of any entry
    int terms_used;

    const Cx<R>& entry(int dz, int dzbar) const { return e[dz][dzbar]; }

    const Cx<R>& k() const { return e[0][0]; }
    const Cx<R>& k1() const { return e[1][0]; }
    const Cx<R>& k1b() const { return e[0][1]; }
    const Cx<R>& k11() const { return e[2][0]; }
    const Cx<R>& k1b1b() const { return e[0][2]; }
    const Cx<R>& k11b() const { return e[1][1]; }
    const Cx<R>& k111b() const { return e[2][1]; }
    const Cx<R>& k11b1b() const { return e[1][2]; }
    const Cx<R>& k111b1b() const { return e[2][2]; }
};

namespace detail {

// Coefficient bound B such that the magnitude of every term with index
// k >= j is at most B * r^{2k}; valid once the j=0 term has been consumed
// (inner denominators >= t - r^4, outer >= 1 - r^2 t for j >= 1).
template <class R>
struct SeriesBounds {
    R b[6]; // K, K1, K11, K11b, K111b, K111b1b

    SeriesBounds(const R& r, const R& t) {
        using std::sqrt;
        R r2 = r * r;
        R din = t - r2 * r2, dout = 1 - r2 * t;
        R s = sqrt(t);
        R di2 = din * din, di3 = di2 * din, di4 = di3 * din, di5 = di4 * din, di6 = di5 * din;
        R do2 = dout * dout, do3 = do2 * dout, do4 = do3 * dout, do5 = do4 * dout, do6 = do5 * dout;
        b[0] = r2 / di2 + 1 / do2;
        b[1] = 2 * r2 * s / di3 + 2 * s / do3;
        b[2] = 6 * r2 * t / di4 + 6 * t / do4;
        b[3] = 6 * r2 * t / di4 + 2 * r2 / di3 + 6 * t / do4 + 2 / do3;
        b[4] = 24 * r2 * t * s / di5 + 12 * r2 * s / di4 + 24 * t * s / do5 + 12 * s / do4;
        b[5] = 6 * r2 * (20 * t * t / di6 + 16 * t / di5 + 2 / di4)
             + 6 * (20 * t * t / do6 + 16 * t / do5 + 2 / do4);
        R m = 0;
        for (const R& x : b) if (x > m) m = x;
        worst = m;
    }

    R worst;
};

} // namespace detail

// Evaluate the jet. Throws DomainError off the annulus and TruncationError
// when the certified tail bound cannot reach policy.tolerance in max_terms.
template <class R>
KernelJet<R> kernel_jet(const Annulus<R>& a, const EvalPoint<R>& pt,
                        const TruncationPolicy<R>& policy = TruncationPolicy<R>::standard()) {
    using std::log;
    require_inside(a, pt.z, "kernel_jet");

    const R PI = pi_const<R>();
    const Cx<R> z = pt.z, zb = conj(z);
    const R t = sqnorm(z);
    const R r = a.r, r2 = r * r;
    const R L = log(r2); // always negative

    KernelJet<R> J;
    J.e[0][0] = Cx<R>(-1 / (PI * t * L));
    J.e[1][0] = R(1) / (PI * L * t) / z;
    J.e[2][0] = R(-2) / (PI * L * t) / (z * z);
    J.e[1][1] = Cx<R>(-1 / (PI * t * t * L));
    J.e[2][1] = R(2) / (PI * L * t * t) / z;
    J.e[2][2] = Cx<R>(-4 / (PI * t * t * t * L));

    detail::SeriesBounds<R> bounds(r, t);
    // geometric tail: sum_{k>j} B r^{2k} = B r^{2(j+1)} / (1 - r^2)
    const R tail_factor = 1 / (PI * (1 - r2));

    R q = 1;        // r^{2j}
    int j = 0;
    for (;; ++j) {
        R p = r2 * q;
        R d1 = t - p, d2 = 1 - q * t;
        R q2 = q * q, q3 = q2 * q, q4 = q3 * q;
        R i2 = d1 * d1, i3 = i2 * d1, i4 = i3 * d1, i5 = i4 * d1, i6 = i5 * d1;
        R o2 = d2 * d2, o3 = o2 * d2, o4 = o3 * d2, o5 = o4 * d2, o6 = o5 * d2;

        J.e[0][0] += Cx<R>((p / i2 + q / o2) / PI);
        J.e[1][0] += zb * ((-2 * p / i3 + 2 * q2 / o3) / PI);
        J.e[2][0] += (zb * zb) * ((6 * p / i4 + 6 * q3 / o4) / PI);
        J.e[1][1] += Cx<R>((6 * p * t / i4 - 2 * p / i3 + 6 * q3 * t / o4 + 2 * q2 / o3) / PI);
        J.e[2][1] += zb * ((-24 * p * t / i5 + 12 * p / i4 + 24 * q4 * t / o5 + 12 * q3 / o4) / PI);
        J.e[2][2] += Cx<R>((6 * p * (20 * t * t / i6 - 16 * t / i5 + 2 / i4)
                          + 6 * q3 * (20 * q2 * t * t / o6 + 16 * q * t / o5 + 2 / o4)) / PI);

        q *= r2; // q = r^{2(j+1)}: the tail starts here
        R tail = bounds.worst * q * tail_factor;
        if (tail < policy.tolerance) {
            J.tail_bound = tail;
            break;
        }
        if (j + 1 >= policy.max_terms)
            throw TruncationError("kernel_jet: tail bound " + std::to_string(double(tail))
                                      + " not below tolerance within max_terms",
                                  double(tail));
    }
    J.terms_used = j + 1;

    // remaining entries by conjugation symmetry of the kernel
    J.e[0][1] = conj(J.e[1][0]);
    J.e[0][2] = conj(J.e[2][0]);
    J.e[1][2] = conj(J.e[2][1]);

    // j=0 denominators reach powers up to 6; report their magnification so
    // near-boundary consumers can judge how many digits survived
    R dmin = t - r2 < 1 - t ? t - r2 : 1 - t;
    R m = 1 / dmin;
    R m2 = m * m;
    J.condition = m2 * m2 * m2;
    return J;
}

// Squared L^2 norm of z^n over the annulus:
//   2 pi (1 - r^{2n+2}) / (2n+2)  for n != -1,   2 pi log(1/r)  for n = -1.
template <class R>
R basis_norm(int n, const Annulus<R>& a) {
    using std::log;
    using std::pow;
    const R PI = pi_const<R>();
    if (n == -1) return 2 * PI * log(1 / a.r);
    return 2 * PI * (1 - pow(a.r, 2 * n + 2)) / (2 * n + 2);
}

// log of basis_norm, safe for any n (the norm itself overflows double once
// r^{2n+2} leaves the exponent range).
template <class R>
R log_basis_norm(int n, const Annulus<R>& a) {
    using std::log;
    using std::log1p;
    using std::pow;
    const R PI = pi_const<R>();
    if (n == -1) return log(2 * PI * log(1 / a.r));
    if (n >= 0) return log(2 * PI) - log(R(2 * n + 2)) + log1p(-pow(a.r, 2 * n + 2));
    int m = -n - 1; // n <= -2: norm = 2 pi r^{-2m} (1 - r^{2m}) / (2m)
    return log(2 * PI) - log(R(2 * m)) - 2 * m * log(a.r) + log1p(-pow(a.r, 2 * m));
}

template <class R>
struct OracleValue {
    Cx<R> value;
    R tail_estimate;
};

// Independent check of the kernel: K(z, conj w) = sum_n z^n conj(w)^n / |z^n|^2
// summed symmetrically over n in [-n_range, n_range]. On the diagonal this
// converges to the closed series' K entry.
template <class R>
OracleValue<R> basis_kernel_oracle(const Annulus<R>& a, const Cx<R>& z, const Cx<R>& w,
                                   int n_range) {
    using std::atan2;
    using std::cos;
    using std::exp;
    using std::log;
    using std::sin;
    require_inside(a, z, "basis_kernel_oracle");
    require_inside(a, w, "basis_kernel_oracle");

    const Cx<R> x = z * conj(w);
    const R lax = log(abs(x)), phx = atan2(x.im, x.re);
    // each term assembled in log scale: x^{-n} alone overflows long before
    // the norm in the denominator tames it
    auto term = [&](int n) {
        R mag = exp(n * lax - log_basis_norm(n, a));
        R ph = n * phx;
        return Cx<R>(mag * cos(ph), mag * sin(ph));
    };
    Cx<R> sum{};
    for (int n = -n_range; n <= n_range; ++n) sum += term(n);

    // positive tail: terms ~ (n+1)|x|^n / (pi (1-r^2));
    // negative tail: terms ~ (n-1) (r^2/|x|)^n / (pi r^2 (1 - r^2))
    using std::pow;
    const R PI = pi_const<R>();
    R ax = abs(x);
    R r2 = a.r * a.r;
    R xpos = ax, xneg = r2 / ax;
    auto poly_geom_tail = [](const R& x0, int N) {
        // sum_{n>N} (n+1) x0^n = x0^{N+1} ((N+2) - (N+1) x0) / (1-x0)^2
        R p = pow(x0, N + 1);
        return p * ((N + 2) - (N + 1) * x0) / ((1 - x0) * (1 - x0));
    };
    R tail = poly_geom_tail(xpos, n_range) / (PI * (1 - r2))
           + poly_geom_tail(xneg, n_range) / (PI * r2 * (1 - r2));
    return {sum, tail};
}

} // namespace bergman
