#include "raywig/state.hpp"

#include <algorithm>
#include <cmath>

namespace raywig {

StateVector::StateVector(Vector amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.size() < 1) {
        throw DomainError("state vector needs dim >= 1");
    }
    if (!amps_.allFinite()) {
        throw DomainError("state vector has non-finite amplitudes");
    }
    bool nonzero = false;
    for (Index i = 0; i < amps_.size(); ++i) {
        if (std::abs(amps_[i]) > 0.0) {
            nonzero = true;
            break;
        }
    }
    if (!nonzero) {
        throw ZeroVectorError("the zero vector is not a state");
    }
}

StateVector StateVector::basis(Index dim, Index i) {
    if (dim < 1 || i < 0 || i >= dim) {
        throw DomainError("basis index out of range");
    }
    Vector v = Vector::Zero(dim);
    v[i] = Complex(1.0, 0.0);
    return StateVector(std::move(v));
}

Complex inner_product(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("inner product of states with different dimension");
    }
    return a.amps().dot(b.amps());  // Eigen conjugates the left factor
}

Ray::Ray(const StateVector& v, const Tolerances& tol) : rep_(v) {
    const double n = v.norm();
    if (n <= tol.orth_tol) {
        throw ZeroVectorError("cannot project a numerically zero vector to a ray");
    }
    Vector amps = v.amps() / n;
    // Canonical gauge: rotate the first significant amplitude onto the
    // positive real axis.
    for (Index i = 0; i < amps.size(); ++i) {
        const double m = std::abs(amps[i]);
        if (m > tol.canon_tol) {
            amps *= std::conj(amps[i]) / m;
            break;
        }
    }
    rep_ = StateVector(std::move(amps));
}

Ray project_to_ray(const StateVector& v, const Tolerances& tol) { return Ray(v, tol); }

double overlap(const Ray& r1, const Ray& r2) {
    if (r1.dim() != r2.dim()) {
        throw DimensionError("overlap of rays with different dimension");
    }
    return std::min(1.0, std::abs(inner_product(r1.rep(), r2.rep())));
}

double ray_distance(const Ray& r1, const Ray& r2) {
    return 2.0 * std::acos(overlap(r1, r2));
}

bool same_ray(const Ray& r1, const Ray& r2, const Tolerances& tol) {
    return overlap(r1, r2) >= 1.0 - tol.eq_tol;
}

}  // namespace raywig
