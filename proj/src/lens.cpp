#include "bergman/lens.hpp"

#include <cmath>
#include <string>

namespace bergman {

namespace {
constexpr double PI = 3.14159265358979323846;
}

LensGeometry::LensGeometry(double r1, double r2, double chord)
    : rho1(r1), rho2(r2), s(chord) {
    if (!(s > 0) || !(2 * rho1 > s) || !(2 * rho2 > s))
        throw DomainError("lens: chord must be positive and shorter than both diameters");
    alpha = std::asin(s / (2 * rho2));
    beta = std::asin(s / (2 * rho1));
    exponent = PI / (2 * PI - alpha - beta);
    angles_admissible = alpha < 0.07 * PI && beta < 0.07 * PI;
}

std::complex<double> lens_map(const LensGeometry& lens, std::complex<double> z) {
    if (std::abs(z) < 1e-13 * lens.s || std::abs(z - std::complex<double>(0, -lens.s)) < 1e-13 * lens.s)
        throw SingularPointError("lens_map: the two circle intersection points are map singularities");
    std::complex<double> w = (1.0 / z - std::complex<double>(0, 1) / lens.s)
                           * std::polar(1.0, -PI / 2 + (lens.beta - lens.alpha) / 2);
    double sector = PI - (lens.alpha + lens.beta) / 2;
    if (std::abs(std::arg(w)) > sector + 1e-9)
        throw BranchError("lens_map: argument left the branch-continuous sector (arg w = "
                          + std::to_string(std::arg(w)) + ", sector half-angle "
                          + std::to_string(sector) + ")");
    std::complex<double> W = std::pow(w, lens.exponent);
    return (W - 1.0) / (W + 1.0);
}

double green_two_discs(const LensGeometry& lens, std::complex<double> z,
                       std::complex<double> z0) {
    if (std::abs(z - z0) == 0.0)
        throw SingularPointError("green_two_discs: z = z0 is the logarithmic pole");
    std::complex<double> fz = lens_map(lens, z), f0 = lens_map(lens, z0);
    return std::log(std::abs((fz - f0) / (1.0 - fz * std::conj(f0))));
}

OverlapFrame overlap_frame(const ChainGeometry& chain, int o, int j, double rho1, double rho2) {
    if (o < 0 || o >= int(chain.overlaps.size()))
        throw DomainError("overlap_frame: overlap index out of range");
    if (j != o && j != o + 1)
        throw DomainError("overlap_frame: probe annulus must touch the overlap");

    const ChainOverlap& ov = chain.overlaps[o];
    // probe side plays U2; the far side bounds U1
    int probe = j, far = (j == o ? o + 1 : o);
    double R_probe = chain.outer_radius[probe], R_far = chain.outer_radius[far];
    if (rho1 <= 0) rho1 = R_far;
    if (rho2 <= 0) rho2 = R_probe * (1 + 1e-6);

    OverlapFrame fr{LensGeometry(rho1, rho2, ov.chord), ov.upper,
                    /*mirrored=*/j == o};
    return fr;
}

LocalizationReport check_localization(const ChainGeometry& chain, int j, int o,
                            std::complex<double> z0, double level,
                            const SublevelSampling& sampling, double rho1, double rho2) {
    OverlapFrame fr = overlap_frame(chain, o, j, rho1, rho2);
    const LensGeometry& lens = fr.lens;

    LocalizationReport rep{};
    rep.alpha = lens.alpha;
    rep.beta = lens.beta;
    rep.angles_pass = lens.angles_admissible;

    const double sinh1 = (1 - std::exp(-2.0)) / (2 * std::exp(-1.0));
    const double cosh1 = (1 + std::exp(-2.0)) / (2 * std::exp(-1.0));
    std::complex<double> f0 = lens_map(lens, fr.to_normalized(z0));
    rep.f_im = f0.imag();
    rep.circle_margin = std::abs(f0 - std::complex<double>(0, sinh1)) - cosh1;
    rep.analytic_pass = rep.f_im < 0 && rep.circle_margin >= 0;

    rep.arccos_constant = std::acos((1 - std::exp(-2.0)) / (1 + std::exp(-2.0))) / PI;
    rep.constant_pass = rep.arccos_constant > 0.21 && rep.arccos_constant < 0.23;

    // polar sampling around z0: march each ray outward until G clears the
    // level by the margin or the ray leaves the lens union
    std::complex<double> z0n = fr.to_normalized(z0);
    const double d1 = std::sqrt(lens.rho1 * lens.rho1 - lens.s * lens.s / 4);
    const double d2 = std::sqrt(lens.rho2 * lens.rho2 - lens.s * lens.s / 4);
    const std::complex<double> c1(-d1, -lens.s / 2), c2(d2, -lens.s / 2);

    rep.samples = rep.escapes = rep.off_domain = 0;
    const double r_start = sampling.first_radius * chain.outer_radius[j];
    for (int ia = 0; ia < sampling.angles; ++ia) {
        double th = 2 * PI * ia / sampling.angles;
        for (double rr = r_start;; rr *= sampling.radial_factor) {
            std::complex<double> world = z0 + std::polar(rr, th);
            std::complex<double> zn = fr.to_normalized(world);
            bool inside_union = std::abs(zn - c1) < lens.rho1 || std::abs(zn - c2) < lens.rho2;
            if (!inside_union) break;
            double G = green_two_discs(lens, zn, z0n);
            if (G < level) {
                ++rep.samples;
                if (!chain.in_annulus(j, world)) {
                    if (chain.in_domain(world))
                        ++rep.escapes;
                    else
                        ++rep.off_domain;
                }
            } else if (G > level + sampling.margin) {
                break;
            }
        }
    }
    rep.containment_pass = rep.escapes == 0;
    return rep;
}

} // namespace bergman
