#pragma once

#include <complex>

#include <Eigen/Dense>

#include "raywig/errors.hpp"
#include "raywig/tolerances.hpp"

namespace raywig {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

/// A nonzero vector of complex amplitudes: an element of N = H - {0}.
///
/// Immutable after construction. Construction rejects the zero vector and any
/// non-finite amplitude.
class StateVector {
public:
    explicit StateVector(Vector amplitudes);

    /// The i-th computational basis vector of the given dimension.
    static StateVector basis(Index dim, Index i);

    Index dim() const noexcept { return amps_.size(); }
    const Vector& amps() const noexcept { return amps_; }
    double norm() const { return amps_.norm(); }

private:
    Vector amps_;
};

/// Hermitian product <a|b>, conjugate-linear in the first argument.
Complex inner_product(const StateVector& a, const StateVector& b);

/// An equivalence class of states under nonzero complex scaling, stored via a
/// canonical representative: unit norm, with the first amplitude of modulus
/// above canon_tol rotated to the positive real axis.
class Ray {
public:
    explicit Ray(const StateVector& v, const Tolerances& tol = {});

    const StateVector& rep() const noexcept { return rep_; }
    Index dim() const noexcept { return rep_.dim(); }

private:
    StateVector rep_;
};

/// Projection Pi: N -> R. Rejects vectors with norm <= orth_tol.
Ray project_to_ray(const StateVector& v, const Tolerances& tol = {});

/// |<r1|r2>| between canonical representatives; in [0, 1], and 1 iff the rays
/// are equal. The square of this value is the transition probability.
double overlap(const Ray& r1, const Ray& r2);

/// Fubini-Study distance delta = 2*arccos(overlap), in [0, pi].
double ray_distance(const Ray& r1, const Ray& r2);

bool same_ray(const Ray& r1, const Ray& r2, const Tolerances& tol = {});

inline bool operator==(const Ray& r1, const Ray& r2) { return same_ray(r1, r2); }
inline bool operator!=(const Ray& r1, const Ray& r2) { return !same_ray(r1, r2); }

}  // namespace raywig
