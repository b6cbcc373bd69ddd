#pragma once

#include <string>

#include "bergman/cxmath.hpp"
#include "bergman/errors.hpp"
#include "bergman/precision.hpp"

namespace bergman {

// Normalized annulus { r < |z| < 1 }.
template <class R>
struct Annulus {
    R r;

    explicit Annulus(R inner) : r(std::move(inner)) {
        if (!(r > 0 && r < 1))
            throw DomainError("annulus inner radius must satisfy 0 < r < 1");
    }

    bool contains(const Cx<R>& z) const {
        R t = sqnorm(z);
        return t > r * r && t < 1;
    }
};

template <class R>
struct EvalPoint {
    Cx<R> z;
    EvalPoint(Cx<R> zz) : z(std::move(zz)) {}
    EvalPoint(R x) : z(std::move(x)) {}
};

template <class R>
void require_inside(const Annulus<R>& a, const Cx<R>& z, const char* what) {
    if (!a.contains(z))
        throw DomainError(std::string(what) + ": point not strictly inside the annulus");
}

// Absolute tail bound per series plus a term-count cap.
template <class R>
struct TruncationPolicy {
    R tolerance;
    int max_terms;

    TruncationPolicy(R tol, int cap) : tolerance(std::move(tol)), max_terms(cap) {
        if (!(tolerance > 0) || max_terms < 1)
            throw DomainError("truncation policy needs tolerance > 0 and max_terms >= 1");
    }

    static TruncationPolicy standard() {
        return TruncationPolicy(R(100) * real_eps<R>(), 200000);
    }
};

} // namespace bergman
