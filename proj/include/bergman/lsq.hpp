#pragma once

#include <cstddef>
#include <vector>

#include "bergman/errors.hpp"

namespace bergman {

// Small dense least squares min |A x - b| by Householder QR.
// Row weights and column scaling are the caller's business.
template <class R>
struct LsqResult {
    std::vector<R> x;
    R condition; // diag-ratio estimate of the scaled R factor
};

template <class R>
LsqResult<R> householder_lsq(std::vector<std::vector<R>> A, std::vector<R> b) {
    using std::abs;
    using std::sqrt;
    const size_t m = A.size(), n = A.empty() ? 0 : A[0].size();
    if (m < n) throw Error("householder_lsq: underdetermined system");

    std::vector<R> v(m);
    for (size_t k = 0; k < n; ++k) {
        R nrm = 0;
        for (size_t i = k; i < m; ++i) nrm += A[i][k] * A[i][k];
        nrm = sqrt(nrm);
        if (A[k][k] > 0) nrm = -nrm;
        v[k] = A[k][k] - nrm;
        for (size_t i = k + 1; i < m; ++i) v[i] = A[i][k];
        R vtv = 0;
        for (size_t i = k; i < m; ++i) vtv += v[i] * v[i];
        if (vtv == 0) continue;
        for (size_t j = k; j < n; ++j) {
            R s = 0;
            for (size_t i = k; i < m; ++i) s += v[i] * A[i][j];
            s = 2 * s / vtv;
            for (size_t i = k; i < m; ++i) A[i][j] -= s * v[i];
        }
        R s = 0;
        for (size_t i = k; i < m; ++i) s += v[i] * b[i];
        s = 2 * s / vtv;
        for (size_t i = k; i < m; ++i) b[i] -= s * v[i];
    }

    R dmax = 0, dmin = 0;
    for (size_t k = 0; k < n; ++k) {
        R d = abs(A[k][k]);
        if (k == 0) { dmax = d; dmin = d; }
        else {
            if (d > dmax) dmax = d;
            if (d < dmin) dmin = d;
        }
    }

    if (dmin == 0) throw Error("householder_lsq: rank deficient");

    LsqResult<R> out;
    out.condition = dmax / dmin;
    out.x.assign(n, R(0));
    for (size_t ii = n; ii-- > 0;) {
        R s = b[ii];
        for (size_t j = ii + 1; j < n; ++j) s -= A[ii][j] * out.x[j];
        out.x[ii] = s / A[ii][ii];
    }
    return out;
}

} // namespace bergman
