#pragma once

#include <array>
#include <string>

#include "bergman/kernel_series.hpp"

namespace bergman {

// Bergman metric density g = (log K)_{z zbar} = K11b/K - |K1|^2/K^2.
// Strictly positive on the annulus.
template <class R>
R metric_g(const KernelJet<R>& J) {
    if (!(J.k().re > 0))
        throw InvalidJetError("metric_g: nonpositive kernel value");
    Cx<R> g = J.k11b() / J.k() - J.k1() * J.k1b() / (J.k() * J.k());
    return g.re;
}

// The auxiliary S = K * g = K11b - |K1|^2 / K.
template <class R>
R s_value(const KernelJet<R>& J) {
    if (!(J.k().re > 0))
        throw InvalidJetError("s_value: nonpositive kernel value");
    Cx<R> s = J.k11b() - J.k1() * J.k1b() / J.k();
    return s.re;
}

// The 24 rational terms whose sum is the Gaussian curvature of the Bergman
// metric. They arise by expanding R = -(log g)_{z zbar} / g through the jet:
// nine terms carry g^{-2}, the other fifteen g^{-3}. Each term is real at
// every point of the annulus (the series depend on z only through |z|^2 and
// matched powers of z, zbar).
template <class R>
std::array<R, 24> curvature_terms(const KernelJet<R>& J) {
    const Cx<R> K = J.k(), K1 = J.k1(), K1b = J.k1b(), K11 = J.k11(),
                K1b1b = J.k1b1b(), K11b = J.k11b(), K111b = J.k111b(),
                K11b1b = J.k11b1b(), K22 = J.k111b1b();
    const Cx<R> g = K11b / K - K1 * K1b / (K * K);
    const Cx<R> K2 = K * K, K3 = K2 * K, K4 = K3 * K, K5 = K4 * K, K6 = K5 * K;
    const Cx<R> S2 = g * g, S3 = S2 * g;

    Cx<R> A[25];
    A[1] = R(4) * K1b * K1b * K1b * K1 * K1 * K1 / (K6 * S3);
    A[2] = R(-2) * K1 * K1 * K1 * K1b * K1b1b / (K5 * S3);
    A[3] = R(-8) * K1 * K1 * K1b * K1b * K11b / (K5 * S3);
    A[4] = R(2) * K1 * K1 * K11b * K1b1b / (K4 * S3);
    A[5] = R(4) * K1 * K1b * K11b * K11b / (K4 * S3);
    A[6] = R(6) * K1 * K1 * K1b * K1b / (K4 * S2);
    A[7] = R(-2) * K1 * K1 * K1b1b / (K3 * S2);
    A[8] = R(-8) * K1 * K1b * K11b / (K3 * S2);
    A[9] = R(2) * K11b * K11b / (K2 * S2);
    A[10] = R(2) * K1 * K1 * K1b * K11b1b / (K4 * S3);
    A[11] = R(-2) * K1 * K11b * K11b1b / (K3 * S3);
    A[12] = R(2) * K1 * K11b1b / (K2 * S2);
    A[13] = R(-2) * K1b * K1b * K1b * K1 * K11 / (K5 * S3);
    A[14] = K1 * K1b * K11 * K1b1b / (K4 * S3);
    A[15] = R(2) * K1b * K1b * K11 * K11b / (K4 * S3);
    A[16] = R(-2) * K1b * K1b * K11 / (K3 * S2);
    A[17] = K11 * K1b1b / (K2 * S2);
    A[18] = -K1b * K11 * K11b1b / (K3 * S3);
    A[19] = R(2) * K1b * K1b * K1 * K111b / (K4 * S3);
    A[20] = -K1 * K1b1b * K111b / (K3 * S3);
    A[21] = R(-2) * K1b * K11b * K111b / (K3 * S3);
    A[22] = R(2) * K1b * K111b / (K2 * S2);
    A[23] = K11b1b * K111b / (K2 * S3);
    A[24] = -K22 / (K * S2);

    std::array<R, 24> out;
    for (int j = 1; j <= 24; ++j) out[j - 1] = A[j].re;
    return out;
}

// Direct curvature route: expand the derivatives of g through the jet
// (quotient rule on K11b/K - K1 K1b/K^2) and form R = (-g11b + g1 g1b/g)/g^2.
template <class R>
R curvature_direct(const KernelJet<R>& J) {
    const Cx<R> K = J.k(), K1 = J.k1(), K1b = J.k1b(), K11 = J.k11(),
                K1b1b = J.k1b1b(), K11b = J.k11b(), K111b = J.k111b(),
                K11b1b = J.k11b1b(), K22 = J.k111b1b();
    const Cx<R> K2 = K * K, K3 = K2 * K, K4 = K3 * K;
    const Cx<R> g = K11b / K - K1 * K1b / K2;
    const Cx<R> g1 = K111b / K - R(2) * K1 * K11b / K2 - K11 * K1b / K2
                   + R(2) * K1 * K1 * K1b / K3;
    const Cx<R> g1b = conj(g1);
    const Cx<R> g11b = K22 / K - R(2) * K111b * K1b / K2 - R(2) * K1 * K11b1b / K2
                     - R(2) * K11b * K11b / K2 - K11 * K1b1b / K2
                     + R(8) * K1 * K1b * K11b / K3 + R(2) * K11 * K1b * K1b / K3
                     + R(2) * K1 * K1 * K1b1b / K3 - R(6) * K1 * K1 * K1b * K1b / K4;
    const Cx<R> Rv = (-g11b + g1 * g1b / g) / (g * g);
    return Rv.re;
}

template <class R>
struct CurvatureBreakdown {
    R g;                      // metric density
    R S;                      // K * g
    std::array<R, 24> a_terms;
    R curvature;              // sum of the 24 terms
    R curvature_direct;       // independent arithmetic route
    R discrepancy;            // |curvature - curvature_direct|
    R condition;              // jet condition estimate
};

namespace detail {
// Default cross-route tolerance: the working-precision analogue of 1e-8
// relative in double, widened by the largest individual term (the 24 terms
// cancel several leading orders near z = sqrt(r); the two routes share that
// cancellation but not its rounding).
template <class R>
R route_tolerance(const std::array<R, 24>& terms, const R& curv) {
    using std::abs;
    using std::sqrt;
    R amax = 0;
    for (const R& a : terms) if (abs(a) > amax) amax = abs(a);
    R eps = real_eps<R>();
    return sqrt(eps / R(2.2e-16)) * R(1e-8) * (1 + abs(curv)) + R(1000) * eps * amax;
}
} // namespace detail

// Full breakdown at one point: the 24 terms, their sum, and the direct route.
// Throws ConsistencyError when the two routes disagree beyond tolerance
// (pass route_tol <= 0 to use the precision-scaled default).
template <class R>
CurvatureBreakdown<R> curvature_breakdown(const Annulus<R>& a, const EvalPoint<R>& pt,
                                          const TruncationPolicy<R>& policy = TruncationPolicy<R>::standard(),
                                          R route_tol = R(0)) {
    using std::abs;
    KernelJet<R> J = kernel_jet(a, pt, policy);
    CurvatureBreakdown<R> out;
    out.g = metric_g(J);
    out.S = s_value(J);
    out.a_terms = curvature_terms(J);
    R sum = 0;
    for (const R& t : out.a_terms) sum += t;
    out.curvature = sum;
    out.curvature_direct = curvature_direct(J);
    out.discrepancy = abs(out.curvature - out.curvature_direct);
    out.condition = J.condition;
    if (!(route_tol > 0)) route_tol = detail::route_tolerance(out.a_terms, out.curvature);
    if (!(out.discrepancy <= route_tol))
        throw ConsistencyError("curvature_breakdown: 24-term sum and direct route disagree: "
                                   + std::to_string(double(out.curvature)) + " vs "
                                   + std::to_string(double(out.curvature_direct)),
                               double(out.curvature), double(out.curvature_direct));
    return out;
}

// Annulus with arbitrary center and radii 0 < rho1 < rho2.
template <class R>
struct GeneralAnnulus {
    Cx<R> center;
    R rho1, rho2;

    GeneralAnnulus(Cx<R> c, R r1, R r2) : center(std::move(c)), rho1(std::move(r1)), rho2(std::move(r2)) {
        if (!(rho1 > 0 && rho1 < rho2))
            throw DomainError("general annulus needs 0 < rho1 < rho2");
    }
};

// Curvature transported from the normalized annulus through z -> (z - c)/rho2,
// which is a biholomorphism onto P_{rho1/rho2}.
template <class R>
R curvature_general_annulus(const GeneralAnnulus<R>& ga, const Cx<R>& z,
                            const TruncationPolicy<R>& policy = TruncationPolicy<R>::standard()) {
    R d = abs(z - ga.center);
    if (!(d > ga.rho1 && d < ga.rho2))
        throw DomainError("curvature_general_annulus: point outside the annulus");
    Annulus<R> unit(ga.rho1 / ga.rho2);
    EvalPoint<R> pt((z - ga.center) / ga.rho2);
    return curvature_breakdown(unit, pt, policy).curvature;
}

} // namespace bergman
