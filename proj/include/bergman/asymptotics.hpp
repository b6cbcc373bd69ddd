#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "bergman/curvature.hpp"
#include "bergman/lsq.hpp"

namespace bergman {

// One basis function r^{-p} * log(r^2)^{-q} with rational p = p_num/p_den.
// Declared table bases use p >= 0 and q >= 0; guard terms used to absorb the
// next orders of the remainder may carry negative entries.
struct BasisTerm {
    int p_num = 0;
    int p_den = 1;
    int log_pow = 0; // q

    template <class R>
    R value(const R& r) const {
        using std::exp;
        using std::log;
        using std::pow;
        R L = log(r * r);
        R rp = exp(-(R(p_num) / p_den) * log(r));
        return rp * pow(L, -log_pow);
    }
};

using TermBasis = std::vector<BasisTerm>;

enum class AsymptoticCase { Sqrt, R310 };

// Result of one coefficient extraction: the fitted coefficients on the
// declared basis, a per-coefficient stability figure from a nested sub-grid,
// and the condition estimate of the (weighted, column-scaled) fit.
template <class R>
struct ExtractionResult {
    std::vector<R> coefficients;
    std::vector<R> stability; // |full-grid - subgrid| per coefficient
    R condition;
};

// Fit evaluable(r_k) against declared + guard terms over a decreasing grid
// and report the declared coefficients. Rows are weighted by 1/(1+|y|) so
// that the low-order coefficients, which only ever matter relatively, are
// resolved; columns are scaled to unit norm before the QR.
template <class R>
ExtractionResult<R> extract_asymptotic_coefficients(
    const std::function<R(const R&)>& evaluable, const TermBasis& basis,
    const std::vector<R>& r_grid, const TermBasis& guards = {},
    double condition_threshold = 0) {
    using std::abs;
    using std::sqrt;
    if (condition_threshold <= 0) // leave ~quarter of the working digits for the solve
        condition_threshold = std::pow(10.0, 0.75 * decimal_digits<R>());

    TermBasis cols = basis;
    cols.insert(cols.end(), guards.begin(), guards.end());
    const size_t m = r_grid.size(), n = cols.size(), nb = basis.size();
    if (m < nb + 2)
        throw DomainError("extract_asymptotic_coefficients: grid shorter than basis length + 2");
    if (m < n + 1) // one extra point so the nested stability solve stays determined
        throw DomainError("extract_asymptotic_coefficients: grid shorter than basis plus guards");
    for (size_t k = 1; k < m; ++k)
        if (!(r_grid[k] < r_grid[k - 1]))
            throw DomainError("extract_asymptotic_coefficients: grid must decrease strictly");

    std::vector<R> y(m);
    for (size_t k = 0; k < m; ++k) y[k] = evaluable(r_grid[k]);

    auto solve = [&](size_t lo, size_t hi, R* cond_out) {
        size_t rows = hi - lo;
        std::vector<std::vector<R>> A(rows, std::vector<R>(n));
        std::vector<R> b(rows), cscale(n, R(0));
        for (size_t k = 0; k < rows; ++k) {
            R w = 1 / (1 + abs(y[lo + k]));
            for (size_t c = 0; c < n; ++c) A[k][c] = cols[c].value(r_grid[lo + k]) * w;
            b[k] = y[lo + k] * w;
        }
        for (size_t c = 0; c < n; ++c) {
            R s = 0;
            for (size_t k = 0; k < rows; ++k) s += A[k][c] * A[k][c];
            cscale[c] = sqrt(s);
            if (cscale[c] == 0) cscale[c] = 1;
            for (size_t k = 0; k < rows; ++k) A[k][c] /= cscale[c];
        }
        LsqResult<R> fit = householder_lsq(std::move(A), std::move(b));
        if (cond_out) *cond_out = fit.condition;
        std::vector<R> x(n);
        for (size_t c = 0; c < n; ++c) x[c] = fit.x[c] / cscale[c];
        return x;
    };

    ExtractionResult<R> out;
    R cond = 0;
    std::vector<R> full = solve(0, m, &cond);
    std::vector<R> nested = solve(1, m, nullptr); // drop shallowest point
    out.condition = cond;
    if (double(cond) > condition_threshold)
        throw ExtractionUnstableError(
            "extract_asymptotic_coefficients: condition estimate too large", double(cond));
    out.coefficients.assign(full.begin(), full.begin() + nb);
    out.stability.resize(nb);
    for (size_t c = 0; c < nb; ++c) out.stability[c] = abs(full[c] - nested[c]);
    return out;
}

// ---- declared bases, default grids and guard sets per case ----

TermBasis table_basis(AsymptoticCase c, bool short_row);
TermBasis table_guards(AsymptoticCase c);
int table_digits(AsymptoticCase c);

template <class R>
std::vector<R> default_grid(AsymptoticCase c) {
    using std::exp;
    using std::log;
    std::vector<R> g;
    const R l10 = log(R(10));
    if (c == AsymptoticCase::Sqrt) {
        // r_k = 10^{-3-k/2}
        for (int k = 0; k <= 16; ++k) g.push_back(exp(-(R(3) + R(k) / 2) * l10));
    } else {
        // the r^{-1/5} L^{-3} table term stays below the log-family remainder
        // until r ~ 1e-20, so this case must probe far deeper
        for (int k = 0; k <= 20; ++k) g.push_back(exp(-(R(6) + 2 * R(k)) * l10));
    }
    return g;
}

// Reference data: one table row per term index, with the coefficients on the
// declared basis for its case ("sum" rows use index 0).
struct ReferenceRow {
    int term_index;          // 1..24, 0 = sum over all terms
    bool short_row;          // uses the short basis of the case
    std::vector<double> coefficients;
};

const std::vector<ReferenceRow>& reference_table(AsymptoticCase c);

// Comparison of one extracted row against its reference.
struct CoefficientRow {
    int term_index;
    AsymptoticCase table_case;
    bool short_row;
    std::vector<double> extracted;
    std::vector<double> reference;
    std::vector<double> stability;
    double max_rel_error;    // max over nonzero references of |ext-ref|/|ref|
    double max_zero_leak;    // max |ext| over zero references, relative to row max
    double condition;
};

// Extract every table row of the case (plus the sum row) and compare with the
// reference coefficients.
std::vector<CoefficientRow> verify_aj_tables(AsymptoticCase c);

// Curvature at z = sqrt(r) for a decreasing sequence of r, with the
// normalization R * 2r log(r^2) that tends to 1.
struct SqrtDivergenceRow {
    double r;
    double curvature;
    double normalized;
};
std::vector<SqrtDivergenceRow> verify_sqrt_divergence(const std::vector<double>& r_seq,
                                                      int precision_digits = 60);

// Curvature at z = r^{3/10} and z = r^{7/10}; both tend to 2 from below and
// agree by the inversion symmetry.
struct R310LimitRow {
    double r;
    double curvature_inner; // at r^{7/10}
    double curvature_outer; // at r^{3/10}
};
std::vector<R310LimitRow> verify_r310_limit(const std::vector<double>& r_seq,
                                            int precision_digits = 80);

// Evaluator shared by the verification drivers: curvature term (or sum) at
// z = r^e for exponent e = 1/2, 3/10 or 7/10, in precision R.
template <class R>
R curvature_at_power(const R& r, int e_num, int e_den, int term_index /*0 = sum*/) {
    using std::exp;
    using std::log;
    Annulus<R> a(r);
    EvalPoint<R> pt(exp((R(e_num) / e_den) * log(r)));
    KernelJet<R> J = kernel_jet(a, pt);
    std::array<R, 24> terms = curvature_terms(J);
    if (term_index > 0) return terms[term_index - 1];
    R s = 0;
    for (const R& t : terms) s += t;
    return s;
}

} // namespace bergman
