#include "bergman/asymptotics.hpp"

#include <cmath>

namespace bergman {

TermBasis table_basis(AsymptoticCase c, bool short_row) {
    if (c == AsymptoticCase::Sqrt) {
        if (short_row) return {{2, 1, 2}, {1, 1, 1}};
        return {{3, 1, 3}, {2, 1, 2}, {2, 1, 3}, {1, 1, 1}};
    }
    if (short_row)
        return {{6, 5, 2}, {3, 5, 1}, {3, 5, 2}, {2, 5, 2}, {0, 5, 0}};
    return {{9, 5, 3}, {6, 5, 2}, {6, 5, 3}, {5, 5, 3}, {3, 5, 1}, {3, 5, 2},
            {3, 5, 3}, {2, 5, 2}, {2, 5, 3}, {1, 5, 3}, {0, 5, 0}};
}

// Guard terms: the next orders of the true remainder beyond each declared
// basis. Without them the fit aliases remainder mass onto the small declared
// coefficients.
TermBasis table_guards(AsymptoticCase c) {
    if (c == AsymptoticCase::Sqrt)
        return {{1, 1, 2}, {1, 1, 3}, {0, 1, 0}, {0, 1, 1}, {0, 1, 2}, {0, 1, 3},
                {-1, 1, -1}, {-1, 1, 0}};
    // log-only family, then the r^{1/5} family down to positive log powers
    return {{0, 5, 1}, {0, 5, 2}, {0, 5, 3},
            {-1, 5, 3}, {-1, 5, 2}, {-1, 5, 1}, {-1, 5, 0}, {-1, 5, -1}, {-1, 5, -2}};
}

int table_digits(AsymptoticCase c) {
    // the deep r-grid of the r310 case loses ~25 digits to cancellation in
    // the metric density before the fit even starts
    return c == AsymptoticCase::Sqrt ? 60 : 120;
}

namespace {

std::vector<ReferenceRow> make_sqrt_table() {
    std::vector<ReferenceRow> t;
    // fifteen rows on {r^-3 L^-3, r^-2 L^-2, r^-2 L^-3, r^-1 L^-1}
    t.push_back({1, false, {-0.5, 3, 12, -6}});
    t.push_back({2, false, {0.5, -3.5, -12, 8}});
    t.push_back({3, false, {1, -8, -24, 20}});
    t.push_back({4, false, {-0.5, 4.5, 12, -13}});
    t.push_back({5, false, {-0.5, 5, 12, -16}});
    t.push_back({10, false, {-0.5, 5, 12, -14}});
    t.push_back({11, false, {0.5, -6, -12, 22}});
    t.push_back({13, false, {0.5, -3.5, -12, 8}});
    t.push_back({14, false, {-0.5, 4, 12, -10.5}});
    t.push_back({15, false, {-0.5, 4.5, 12, -13}});
    t.push_back({18, false, {0.5, -5.5, -12, 18}});
    t.push_back({19, false, {-0.5, 5, 12, -14}});
    t.push_back({20, false, {0.5, -5.5, -12, 18}});
    t.push_back({21, false, {0.5, -6, -12, 22}});
    t.push_back({23, false, {-0.5, 7, 12, -30}});
    // nine rows on {r^-2 L^-2, r^-1 L^-1}
    t.push_back({6, true, {1.5, -6}});
    t.push_back({7, true, {-1, 5}});
    t.push_back({8, true, {-2, 12}});
    t.push_back({9, true, {0.5, -4}});
    t.push_back({12, true, {1, -8}});
    t.push_back({16, true, {-1, 5}});
    t.push_back({17, true, {1, -6}});
    t.push_back({22, true, {1, -8}});
    t.push_back({24, true, {-1, 11}});
    // the sum cancels the three leading orders
    t.push_back({0, false, {0, 0, 0, 0.5}});
    return t;
}

std::vector<ReferenceRow> make_r310_table() {
    std::vector<ReferenceRow> t;
    t.push_back({1, false, {-4, 0, 96, 12, 0, -72, -1212, 0, -384, -24, 0}});
    t.push_back({2, false, {4, -4, -96, -12, 0, 144, 1212, 12, 384, 24, 0}});
    t.push_back({3, false, {8, -8, -192, -24, 0, 272, 2424, 16, 768, 48, 0}});
    t.push_back({4, false, {-4, 8, 96, 12, -4, -208, -1212, -20, -384, -24, 0}});
    t.push_back({5, false, {-4, 8, 96, 12, -4, -200, -1212, -16, -384, -24, 0}});
    t.push_back({10, false, {-4, 8, 96, 12, -4, -224, -1212, -16, -384, -24, 0}});
    t.push_back({11, false, {4, -12, -96, -12, 12, 288, 1212, 24, 384, 24, -4}});
    t.push_back({13, false, {4, -4, -96, -12, 0, 144, 1212, 12, 384, 24, 0}});
    t.push_back({14, false, {-4, 8, 96, 12, -4, -216, -1212, -24, -384, -24, 0}});
    t.push_back({15, false, {-4, 8, 96, 12, -4, -208, -1212, -20, -384, -24, 0}});
    t.push_back({18, false, {4, -12, -96, -12, 12, 296, 1212, 28, 384, 24, -4}});
    t.push_back({19, false, {-4, 8, 96, 12, -4, -224, -1212, -16, -384, -24, 0}});
    t.push_back({20, false, {4, -12, -96, -12, 12, 296, 1212, 28, 384, 24, -4}});
    t.push_back({21, false, {4, -12, -96, -12, 12, 288, 1212, 24, 384, 24, -4}});
    t.push_back({23, false, {-4, 16, 96, 12, -24, -376, -1212, -32, -384, -24, 16}});
    // nine rows on {r^-6/5 L^-2, r^-3/5 L^-1, r^-3/5 L^-2, r^-2/5 L^-2, 1}
    t.push_back({6, true, {6, 0, -96, -12, 0}});
    t.push_back({7, true, {-4, 4, 64, 8, 0}});
    t.push_back({8, true, {-8, 8, 128, 16, 0}});
    t.push_back({9, true, {2, -4, -32, -4, 2}});
    t.push_back({12, true, {4, -8, -64, -8, 4}});
    t.push_back({16, true, {-4, 4, 64, 8, 0}});
    t.push_back({17, true, {4, -8, -64, -8, 4}});
    t.push_back({22, true, {4, -8, -64, -8, 4}});
    t.push_back({24, true, {-4, 12, 64, 8, -12}});
    // everything cancels except the constant
    t.push_back({0, false, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2}});
    return t;
}

} // namespace

const std::vector<ReferenceRow>& reference_table(AsymptoticCase c) {
    static const std::vector<ReferenceRow> sqrt_table = make_sqrt_table();
    static const std::vector<ReferenceRow> r310_table = make_r310_table();
    return c == AsymptoticCase::Sqrt ? sqrt_table : r310_table;
}

namespace {

template <class R>
std::vector<CoefficientRow> verify_tables_impl(AsymptoticCase c) {
    const int e_num = c == AsymptoticCase::Sqrt ? 1 : 3;
    const int e_den = c == AsymptoticCase::Sqrt ? 2 : 10;
    const TermBasis guards = table_guards(c);
    const std::vector<R> grid = default_grid<R>(c);

    std::vector<CoefficientRow> rows;
    for (const ReferenceRow& ref : reference_table(c)) {
        TermBasis basis = table_basis(c, ref.short_row);
        std::function<R(const R&)> f = [&](const R& r) {
            return curvature_at_power<R>(r, e_num, e_den, ref.term_index);
        };
        ExtractionResult<R> ex = extract_asymptotic_coefficients<R>(f, basis, grid, guards);

        CoefficientRow row;
        row.term_index = ref.term_index;
        row.table_case = c;
        row.short_row = ref.short_row;
        row.reference = ref.coefficients;
        row.condition = double(ex.condition);
        for (const R& v : ex.coefficients) row.extracted.push_back(double(v));
        for (const R& v : ex.stability) row.stability.push_back(double(v));

        double row_max = 0;
        for (double v : ref.coefficients) row_max = std::max(row_max, std::abs(v));
        double rel = 0, leak = 0;
        for (size_t i = 0; i < ref.coefficients.size(); ++i) {
            if (ref.coefficients[i] != 0)
                rel = std::max(rel, std::abs(row.extracted[i] - ref.coefficients[i])
                                        / std::abs(ref.coefficients[i]));
            else
                leak = std::max(leak, std::abs(row.extracted[i]) / row_max);
        }
        row.max_rel_error = rel;
        row.max_zero_leak = leak;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

std::vector<CoefficientRow> verify_aj_tables(AsymptoticCase c) {
    return with_precision(table_digits(c), [&](auto tag) {
        return verify_tables_impl<decltype(tag)>(c);
    });
}

namespace {

// Relative rounding-noise estimate of a 24-term sum: eps times the largest
// term over the sum. Used to flag precision exhaustion before it corrupts
// the reported trend.
template <class R>
void check_headroom(const std::array<R, 24>& terms, const R& sum, double r) {
    using std::abs;
    R amax = 0;
    for (const R& t : terms) if (abs(t) > amax) amax = abs(t);
    if (amax * real_eps<R>() * 1e6 > abs(sum))
        throw PrecisionExhaustedError(
            "curvature sum cancellation exhausted the working precision at r = "
                + std::to_string(r),
            r);
}

template <class R>
std::vector<SqrtDivergenceRow> sqrt_divergence_impl(const std::vector<double>& r_seq) {
    using std::exp;
    using std::log;
    using std::sqrt;
    std::vector<SqrtDivergenceRow> rows;
    for (double rd : r_seq) {
        if (!(rd > 0 && rd <= 1e-2))
            throw DomainError("verify_sqrt_divergence: r must lie in (0, 1e-2]");
        R r = R(rd);
        Annulus<R> a(r);
        EvalPoint<R> pt(sqrt(r));
        KernelJet<R> J = kernel_jet(a, pt);
        std::array<R, 24> terms = curvature_terms(J);
        R sum = 0;
        for (const R& t : terms) sum += t;
        check_headroom(terms, sum, rd);
        R normalized = sum * 2 * r * log(r * r);
        rows.push_back({rd, double(sum), double(normalized)});
    }
    return rows;
}

template <class R>
std::vector<R310LimitRow> r310_limit_impl(const std::vector<double>& r_seq) {
    using std::exp;
    using std::log;
    std::vector<R310LimitRow> rows;
    auto curvature_at = [](const Annulus<R>& a, const R& z, double rd) {
        KernelJet<R> J = kernel_jet(a, EvalPoint<R>(z));
        std::array<R, 24> terms = curvature_terms(J);
        R sum = 0;
        for (const R& t : terms) sum += t;
        check_headroom(terms, sum, rd);
        return sum;
    };
    for (double rd : r_seq) {
        if (!(rd > 0 && rd <= 1e-2))
            throw DomainError("verify_r310_limit: r must lie in (0, 1e-2]");
        R r = R(rd);
        Annulus<R> a(r);
        R lr = log(r);
        R outer = curvature_at(a, exp(R(3) / 10 * lr), rd);
        R inner = curvature_at(a, exp(R(7) / 10 * lr), rd);
        rows.push_back({rd, double(inner), double(outer)});
    }
    return rows;
}

} // namespace

std::vector<SqrtDivergenceRow> verify_sqrt_divergence(const std::vector<double>& r_seq,
                                                      int precision_digits) {
    if (precision_digits < 50) precision_digits = 60;
    return with_precision(precision_digits, [&](auto tag) {
        return sqrt_divergence_impl<decltype(tag)>(r_seq);
    });
}

std::vector<R310LimitRow> verify_r310_limit(const std::vector<double>& r_seq,
                                            int precision_digits) {
    if (precision_digits < 50) precision_digits = 80;
    return with_precision(precision_digits, [&](auto tag) {
        return r310_limit_impl<decltype(tag)>(r_seq);
    });
}

} // namespace bergman
