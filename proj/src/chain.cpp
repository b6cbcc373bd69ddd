#include "bergman/chain.hpp"

#include <algorithm>
#include <cmath>

namespace bergman {

double chord_angle_cap() {
    return std::sin(0.07 * 3.14159265358979323846);
}

double circle_center_gap(double Ra, double Rb, double s) {
    if (!(s > 0) || !(s < 2 * Ra) || !(s < 2 * Rb))
        throw DomainError("circle_center_gap: chord must fit inside both circles");
    double h = s / 2;
    return std::sqrt(Ra * Ra - h * h) + std::sqrt(Rb * Rb - h * h);
}

double chord_bound(double R_j, double r_j, double R_next, double r_next) {
    double cap = chord_angle_cap();
    // the last two terms are kept exactly as stated: an outer radius minus a
    // dimensionless ratio to the 3/10
    double b1 = 2 * R_j * cap;
    double b2 = 2 * R_next * cap;
    double b3 = R_j - std::pow(r_j / R_j, 0.3);
    double b4 = R_next - std::pow(r_next / R_next, 0.3);
    return std::min(std::min(b1, b2), std::min(b3, b4));
}

namespace {

struct Sequences {
    std::vector<double> R, r, s;
};

Sequences materialize(const ChainSpec& spec, int J) {
    Sequences q;
    if (spec.rule) {
        const ChainRule& rule = *spec.rule;
        if (!(rule.outer_first > 0) || !(rule.outer_ratio > 0))
            throw ChainSpecError("chain rule: outer radii must be positive", "i", -1);
        if (!(rule.outer_ratio < 1))
            throw ChainSpecError(
                "condition (i) violated: outer-radius ratio >= 1 makes the radii non-summable",
                "i", -1);
        if (!(rule.ratio_first > 0) || !(rule.ratio_ratio > 0))
            throw ChainSpecError("chain rule: inner/outer ratios must be positive", "ii", -1);
        if (!(rule.ratio_ratio < 1))
            throw ChainSpecError(
                "condition (ii) violated: r_j/R_j does not decrease to zero under this rule",
                "ii", -1);
        double ratio = rule.ratio_first;
        double R = rule.outer_first;
        for (int j = 0; j < J; ++j) {
            q.R.push_back(R);
            q.r.push_back(R * ratio);
            R *= rule.outer_ratio;
            ratio *= rule.ratio_ratio;
        }
        if (!(rule.safety > 0) || !(rule.safety < 1))
            throw ChainSpecError(
                "condition (iii) violated: overlap safety factor must lie in (0,1)", "iii", -1);
        for (int j = 0; j + 1 < J; ++j) {
            double bound = chord_bound(q.R[j], q.r[j], q.R[j + 1], q.r[j + 1]);
            if (!(bound > 0))
                throw ChainSpecError(
                    "condition (iii) violated: chord bound nonpositive at overlap "
                        + std::to_string(j + 1),
                    "iii", j + 1);
            q.s.push_back(rule.safety * bound);
        }
        return q;
    }

    if (int(spec.outer.size()) < J || int(spec.inner.size()) < J ||
        int(spec.overlap.size()) + 1 < J)
        throw ChainSpecError("explicit chain spec shorter than requested length", "i", -1);
    q.R.assign(spec.outer.begin(), spec.outer.begin() + J);
    q.r.assign(spec.inner.begin(), spec.inner.begin() + J);
    q.s.assign(spec.overlap.begin(), spec.overlap.begin() + (J - 1));
    // condition (i) concerns the whole infinite sequence; a finite explicit
    // list is accepted as satisfied by assumption
    return q;
}

void validate(const Sequences& q) {
    const int J = int(q.R.size());
    for (int j = 0; j < J; ++j) {
        if (!(q.R[j] > 0))
            throw ChainSpecError("outer radius must be positive at index " + std::to_string(j + 1),
                                 "i", j + 1);
        if (!(q.r[j] > 0) || !(q.r[j] < q.R[j]))
            throw ChainSpecError(
                "inner radius must satisfy 0 < r_j < R_j at index " + std::to_string(j + 1), "ii",
                j + 1);
    }
    if (!(q.r[0] < q.R[0] / 2))
        throw ChainSpecError("condition (ii) violated: r_1 >= R_1/2", "ii", 1);
    for (int j = 0; j + 1 < J; ++j) {
        if (!(q.r[j + 1] / q.R[j + 1] < q.r[j] / q.R[j]))
            throw ChainSpecError(
                "condition (ii) violated: r_j/R_j not strictly decreasing at index "
                    + std::to_string(j + 2),
                "ii", j + 2);
    }
    for (int j = 0; j + 1 < J; ++j) {
        double bound = chord_bound(q.R[j], q.r[j], q.R[j + 1], q.r[j + 1]);
        if (!(q.s[j] > 0) || !(q.s[j] < bound))
            throw ChainSpecError(
                "condition (iii) violated: chord s_" + std::to_string(j + 1)
                    + " not below min{2 R sin(0.07 pi), R - (r/R)^(3/10)} terms",
                "iii", j + 1);
    }
}

} // namespace

ChainGeometry build_chain(const ChainSpec& spec, int length) {
    int J = length > 0 ? length : spec.length;
    if (J < 2) throw ChainSpecError("chain needs at least two annuli", "i", -1);

    Sequences q = materialize(spec, J);
    validate(q);

    ChainGeometry g;
    g.outer_radius = q.R;
    g.inner_radius = q.r;
    g.centers.assign(J, 0.0);

    // consecutive centers sit on opposite sides of the common chord:
    // x_{j+1} - x_j = sqrt(R_j^2 - (s/2)^2) + sqrt(R_{j+1}^2 - (s/2)^2)
    for (int j = 0; j + 1 < J; ++j) {
        double h = q.s[j] / 2;
        double a = std::sqrt(q.R[j] * q.R[j] - h * h);
        double b = std::sqrt(q.R[j + 1] * q.R[j + 1] - h * h);
        g.centers[j + 1] = g.centers[j] + a + b;

        ChainOverlap ov;
        ov.chord = q.s[j];
        double xc = g.centers[j] + a;
        ov.upper = {xc, h};
        ov.lower = {xc, -h};
        ov.removal_center = {xc, 0};
        ov.removal_radius = h;
        g.overlaps.push_back(ov);
    }

    if (spec.rule) {
        // zeta = lim (x_j + R_j): extend the recursion until the radii die out
        const ChainRule& rule = *spec.rule;
        double R = q.R.back(), ratio = q.r.back() / q.R.back(), x = g.centers.back();
        while (R > 1e-18) {
            double Rn = R * rule.outer_ratio;
            double rn = ratio * rule.ratio_ratio;
            double bound = chord_bound(R, R * ratio, Rn, Rn * rn);
            if (!(bound > 0))
                throw ChainSpecError("condition (iii) violated in the rule tail", "iii", -1);
            double h = rule.safety * bound / 2;
            x += std::sqrt(R * R - h * h) + std::sqrt(Rn * Rn - h * h);
            R = Rn;
            ratio = rn;
        }
        g.accumulation_point = x + R;
    }
    return g;
}

SpecialPoints special_points(const ChainGeometry& chain, int j) {
    if (j < 0 || j >= chain.length())
        throw DomainError("special_points: annulus index out of range");
    double R = chain.outer_radius[j], r = chain.inner_radius[j], x = chain.centers[j];
    double u = r / R;
    SpecialPoints p;
    p.sqrt_point = {x + R * std::sqrt(u), 0};
    p.r310_point = {x + R * std::pow(u, 0.3), 0};

    auto check = [&](std::complex<double> z, const char* name) {
        if (!chain.in_annulus(j, z))
            throw GeometryError(std::string(name) + " fell outside its annulus");
        for (int o = std::max(0, j - 1); o <= j && o < int(chain.overlaps.size()); ++o) {
            const ChainOverlap& ov = chain.overlaps[o];
            if (std::abs(z - ov.removal_center) <= ov.removal_radius)
                throw GeometryError(std::string(name)
                                    + " fell inside a removal disc; condition (iii) violated");
        }
    };
    check(p.sqrt_point, "sqrt special point");
    check(p.r310_point, "r310 special point");
    return p;
}

} // namespace bergman
