#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "bergman/errors.hpp"

namespace bergman {

// Curvature sweep along the real segment (r, 1).
struct SweepRequest {
    double r;
    int sample_count;
    double lo = 0;           // defaults to r + margin
    double hi = 0;           // defaults to 1 - margin
    double tolerance = 0;    // series tail bound, 0 = precision default
    int max_terms = 200000;

    SweepRequest(double rr, int n) : r(rr), sample_count(n) {
        if (!(r > 0 && r < 1)) throw DomainError("sweep: r must lie in (0,1)");
        if (sample_count < 2) throw DomainError("sweep: sample_count must be >= 2");
    }
};

struct SweepRow {
    double z, curvature, g, k;
    std::string error; // empty on success
};

struct SweepOutcome {
    std::vector<SweepRow> rows;
    bool partial = false; // true when any row failed
};

// Evaluate the sweep. Sample points are lo + (hi-lo) * i / n for i in
// [0, n): rerunning with doubled sample_count reproduces the original
// abscissae bit-exactly at the even indices.
SweepOutcome run_sweep(const SweepRequest& req);

// Write `z,R,g,K` rows (plus an error column when any row failed) with
// round-trip precision and LF line endings.
void write_sweep_csv(const SweepOutcome& outcome, std::ostream& os);

} // namespace bergman
