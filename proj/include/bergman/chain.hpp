#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "bergman/errors.hpp"

namespace bergman {

// Generation rule for the three chain sequences:
//   R_j   = outer_first * outer_ratio^{j-1}        (outer radii)
//   r_j   = R_j * ratio_first * ratio_ratio^{j-1}  (inner radii via r_j/R_j)
//   s_j   = safety * min{ ... of condition (iii) } (overlap chords)
struct ChainRule {
    double outer_first = 0.5;
    double outer_ratio = 0.5;
    double ratio_first = 1.0 / 16;
    double ratio_ratio = 1.0 / 16;
    double safety = 0.9;
};

// Either rule-generated or explicit finite lists. Explicit specs carry outer
// and inner radii of length J and chords of length J-1.
struct ChainSpec {
    std::optional<ChainRule> rule;
    std::vector<double> outer;
    std::vector<double> inner;
    std::vector<double> overlap;
    int length = 6;

    static ChainSpec default_spec() {
        ChainSpec s;
        s.rule = ChainRule{};
        return s;
    }
};

// One overlap between consecutive outer circles: the common chord is
// vertical, its endpoints are complex conjugates, and the removal disc sits
// at the chord midpoint with radius chord/2.
struct ChainOverlap {
    double chord;                 // s_j
    std::complex<double> upper;   // intersection point, Im > 0
    std::complex<double> lower;   // conjugate intersection point
    std::complex<double> removal_center;
    double removal_radius;
};

struct ChainGeometry {
    std::vector<double> centers;       // x_j on the real axis
    std::vector<double> outer_radius;  // R_j
    std::vector<double> inner_radius;  // r_j
    std::vector<ChainOverlap> overlaps;
    std::optional<double> accumulation_point; // zeta = lim x_j + R_j, rule chains only

    int length() const { return int(centers.size()); }

    bool in_annulus(int j, std::complex<double> z) const {
        double d = std::abs(z - std::complex<double>(centers[j], 0));
        return d > inner_radius[j] && d < outer_radius[j];
    }

    // membership in the full union of annuli
    bool in_domain(std::complex<double> z) const {
        for (int j = 0; j < length(); ++j)
            if (in_annulus(j, z)) return true;
        return false;
    }
};

// sin(0.07 pi), the chord cap of condition (iii)
double chord_angle_cap();

// Distance between the centers of two circles of radii Ra, Rb that intersect
// with common chord s, centers on opposite sides of the chord.
double circle_center_gap(double Ra, double Rb, double s);

// The condition (iii) bound for chord s_j between annuli j and j+1 (1-based).
double chord_bound(double R_j, double r_j, double R_next, double r_next);

// Materialize and validate J annuli. Throws ChainSpecError naming the violated
// condition: (i) summable outer radii (checked as ratio < 1 for rules,
// accepted as given for explicit lists), (ii) r_1 < R_1/2 with r_j/R_j
// strictly decreasing (and tending to 0 under a rule), (iii) the chord cap.
ChainGeometry build_chain(const ChainSpec& spec, int length = 0);

// z'_j and z''_j of annulus j (0-based index): the images of
// R_j sqrt(r_j/R_j) and R_j (r_j/R_j)^{3/10} on the positive real axis of the
// normalized annulus, verified to lie inside the annulus and outside both
// removal discs.
struct SpecialPoints {
    std::complex<double> sqrt_point;  // z'_j
    std::complex<double> r310_point;  // z''_j
};
SpecialPoints special_points(const ChainGeometry& chain, int j);

} // namespace bergman
