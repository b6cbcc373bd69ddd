#include "bergman/sweep.hpp"

#include "bergman/csv.hpp"
#include "bergman/curvature.hpp"

namespace bergman {

SweepOutcome run_sweep(const SweepRequest& req) {
    double lo = req.lo, hi = req.hi;
    double margin = 0.002 * (1 - req.r);
    if (lo <= 0) lo = req.r + margin;
    if (hi <= 0) hi = 1 - margin;
    if (!(req.r < lo && lo < hi && hi < 1))
        throw DomainError("sweep: range must satisfy r < lo < hi < 1");

    Annulus<double> a(req.r);
    TruncationPolicy<double> policy(req.tolerance > 0 ? req.tolerance : 100 * real_eps<double>(),
                                    req.max_terms);
    SweepOutcome out;
    out.rows.reserve(req.sample_count);
    const int n = req.sample_count;
    for (int i = 0; i < n; ++i) {
        double z = lo + (hi - lo) * (double(i) / n);
        SweepRow row{z, 0, 0, 0, ""};
        try {
            CurvatureBreakdown<double> b = curvature_breakdown(a, EvalPoint<double>(z), policy);
            row.curvature = b.curvature;
            row.g = b.g;
            row.k = b.S / b.g; // S = K g
        } catch (const Error& e) {
            row.error = e.what();
            out.partial = true;
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

void write_sweep_csv(const SweepOutcome& outcome, std::ostream& os) {
    os << (outcome.partial ? "z,R,g,K,error\n" : "z,R,g,K\n");
    for (const SweepRow& row : outcome.rows) {
        os << csv_double(row.z) << ',' << csv_double(row.curvature) << ','
           << csv_double(row.g) << ',' << csv_double(row.k);
        if (outcome.partial) os << ',' << row.error;
        os << '\n';
    }
}

} // namespace bergman
