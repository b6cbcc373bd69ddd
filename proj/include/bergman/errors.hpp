#pragma once

#include <stdexcept>
#include <string>

namespace bergman {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation point outside the domain it is evaluated on.
struct DomainError : Error {
    using Error::Error;
};

// The requested series tail bound cannot be met within max_terms.
struct TruncationError : Error {
    double achievable_bound;
    TruncationError(const std::string& msg, double achievable)
        : Error(msg), achievable_bound(achievable) {}
};

// Jet fails a structural requirement (e.g. nonpositive kernel value).
struct InvalidJetError : Error {
    using Error::Error;
};

// Two independent evaluation routes disagree beyond tolerance.
struct ConsistencyError : Error {
    double value_a, value_b;
    ConsistencyError(const std::string& msg, double a, double b)
        : Error(msg), value_a(a), value_b(b) {}
};

// Linear fit too ill-conditioned to trust the extracted coefficients.
struct ExtractionUnstableError : Error {
    double condition;
    ExtractionUnstableError(const std::string& msg, double cond)
        : Error(msg), condition(cond) {}
};

// Cancellation consumed the available working digits.
struct PrecisionExhaustedError : Error {
    double at_r;
    PrecisionExhaustedError(const std::string& msg, double r)
        : Error(msg), at_r(r) {}
};

// Constrained extremal problem has too few basis elements for its constraints.
struct DegenerateConstraintError : Error {
    using Error::Error;
};

// Chain spec violates one of the construction conditions (i)/(ii)/(iii).
struct ChainSpecError : Error {
    std::string condition; // "i", "ii" or "iii"
    int index;             // first offending sequence index (1-based), -1 if global
    ChainSpecError(const std::string& msg, std::string cond, int idx)
        : Error(msg), condition(std::move(cond)), index(idx) {}
};

// Derived chain geometry contradicts what the validated conditions guarantee.
struct GeometryError : Error {
    using Error::Error;
};

// Conformal lens map evaluated at one of its two boundary singularities.
struct SingularPointError : Error {
    using Error::Error;
};

// Power-map argument left the branch-continuous sector of the lens map.
struct BranchError : Error {
    using Error::Error;
};

} // namespace bergman
