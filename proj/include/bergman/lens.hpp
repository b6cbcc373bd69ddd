#pragma once

#include <complex>

#include "bergman/chain.hpp"

namespace bergman {

// Two-disc lens in normalized coordinates: discs U1 (radius rho1, centered
// left of the chord) and U2 (radius rho2, centered right) intersecting at 0
// and -is. The union maps conformally onto the unit disc by
//
//   f(z) = (w^e - 1)/(w^e + 1),
//   w(z) = (1/z - i/s) e^{-i pi/2} e^{i (beta-alpha)/2},
//   e    = pi / (2 pi - alpha - beta),
//
// with alpha = arcsin(s/(2 rho2)), beta = arcsin(s/(2 rho1)). After the
// rotation, w ranges over the sector |arg w| < pi - (alpha+beta)/2, so the
// principal branch of the power is continuous on the lens; every evaluation
// asserts sector membership.
struct LensGeometry {
    double rho1, rho2, s;
    double alpha, beta;
    double exponent;
    bool angles_admissible; // alpha < 0.07 pi and beta < 0.07 pi

    LensGeometry(double r1, double r2, double chord);
};

std::complex<double> lens_map(const LensGeometry& lens, std::complex<double> z);

// Green function of the two-disc union:
//   G(z, z0) = log | (f(z) - f(z0)) / (1 - f(z) conj(f(z0))) |.
double green_two_discs(const LensGeometry& lens, std::complex<double> z,
                       std::complex<double> z0);

// World-to-normalized frame for one overlap of a chain. When the probe point
// lives in the annulus left of the chord, the frame is mirrored (x -> -x
// through the chord) so that its disc always plays U2.
struct OverlapFrame {
    LensGeometry lens;
    std::complex<double> chord_upper; // world coordinates of the upper intersection
    bool mirrored;

    std::complex<double> to_normalized(std::complex<double> world) const {
        std::complex<double> t = world - chord_upper;
        return mirrored ? std::complex<double>(-t.real(), t.imag()) : t;
    }
};

// Build the frame for overlap `o` (between annuli o and o+1, 0-based) with
// the probe point in annulus `j` (must be o or o+1). Defaults rho1 to the
// far-side outer radius and rho2 to the probe-side radius times (1 + 1e-6);
// both can be overridden.
OverlapFrame overlap_frame(const ChainGeometry& chain, int o, int j,
                           double rho1 = 0, double rho2 = 0);

// Localization report for one overlap and one probe point z0 in annulus j.
struct LocalizationReport {
    // (a) analytic sublevel-confinement test
    double f_im;            // Im f(z0), must be < 0
    double circle_margin;   // |f(z0) - i sinh 1| - cosh 1, must be >= 0
    bool analytic_pass;
    // (b) angle preconditions
    double alpha, beta;
    bool angles_pass;
    // (c) sampled sublevel containment
    long samples;           // points probed with G < level
    long escapes;           // of those, inside the domain but outside annulus j
    long off_domain;        // of those, outside the union of annuli altogether
    bool containment_pass;  // escapes == 0
    // (d) the arccos constant
    double arccos_constant; // arccos((1-e^-2)/(1+e^-2)) / pi
    bool constant_pass;     // in (0.21, 0.23)

    bool all_pass() const {
        return analytic_pass && angles_pass && containment_pass && constant_pass;
    }
};

struct SublevelSampling {
    int angles = 256;
    double radial_factor = 1.06;
    double margin = 0.1;
    double first_radius = 1e-5; // relative to the probe annulus outer radius
};

LocalizationReport check_localization(const ChainGeometry& chain, int j, int o,
                            std::complex<double> z0, double level = -1,
                            const SublevelSampling& sampling = {},
                            double rho1 = 0, double rho2 = 0);

} // namespace bergman
