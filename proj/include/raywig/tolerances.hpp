#pragma once

#include "raywig/errors.hpp"

namespace raywig {

/// Numerical thresholds shared across the library.
///
/// eq_tol decides equality of reals and complex numbers, orth_tol is the level
/// below which an inner product is treated as exactly zero, and canon_tol is
/// the threshold used when picking the gauge-fixing amplitude of a ray
/// representative.
struct Tolerances {
    double eq_tol = 1e-10;
    double orth_tol = 1e-12;
    double canon_tol = 1e-12;

    void validate() const {
        auto ok = [](double t) { return t > 0.0 && t < 1e-3; };
        if (!ok(eq_tol) || !ok(orth_tol) || !ok(canon_tol)) {
            throw DomainError("tolerances must be strictly positive and below 1e-3");
        }
    }
};

}  // namespace raywig
