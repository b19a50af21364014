#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "raywig/random.hpp"
#include "raywig/state.hpp"

namespace raywig {

/// The scalar function chi with Delta' = chi(Delta): identity for unitary
/// lifts, complex conjugation for antiunitary ones.
enum class ChiKind {
    identity,
    conjugation,
};

inline Complex chi_apply(ChiKind chi, Complex z) {
    return chi == ChiKind::identity ? z : std::conj(z);
}

/// A black-box map of ray space. Matrix kinds act as Pi(M v) or
/// Pi(M conj(v)); table kinds answer only on a finite set of rays; callable
/// kinds wrap an arbitrary evaluation rule.
class RayMapOracle {
public:
    enum class Kind {
        matrix_unitary,
        matrix_antiunitary,
        table,
        callable,
    };

    static RayMapOracle unitary(Matrix m);
    static RayMapOracle antiunitary(Matrix m);
    static RayMapOracle from_table(std::vector<std::pair<Ray, Ray>> pairs);
    static RayMapOracle from_function(Index dim, std::function<Ray(const Ray&)> fn);

    /// Composition lhs(rhs(.)) as a callable oracle.
    static RayMapOracle compose(RayMapOracle lhs, RayMapOracle rhs);

    Ray apply(const Ray& r) const;

    Index dim() const noexcept { return dim_; }
    Kind kind() const noexcept { return kind_; }
    bool is_matrix_kind() const noexcept {
        return kind_ == Kind::matrix_unitary || kind_ == Kind::matrix_antiunitary;
    }
    /// Matrix of a matrix-kind oracle.
    const Matrix& matrix() const;
    /// Domain rays of a table-kind oracle.
    const std::vector<std::pair<Ray, Ray>>& table() const;

private:
    RayMapOracle(Kind kind, Index dim) : kind_(kind), dim_(dim) {}

    Kind kind_;
    Index dim_;
    Matrix matrix_;
    std::vector<std::pair<Ray, Ray>> table_;
    std::function<Ray(const Ray&)> fn_;
};

struct IsometryCheck {
    bool isometry;
    double max_deviation;
};

/// Compare overlaps of random ray pairs before and after the map. Table
/// oracles are sampled over their own domain.
IsometryCheck is_isometry_sampled(const RayMapOracle& map, std::size_t trials, Rng& rng,
                                  const Tolerances& tol = {});

struct ChiOptions {
    std::size_t search_bound = 1000;  // draws before giving up
    std::size_t cross_checks = 10;    // triples that must agree
};

/// Classify the map as Delta-preserving or Delta-conjugating using random
/// triples with |Im Delta| above 10 * orth_tol. Requires dim >= 2.
ChiKind determine_chi(const RayMapOracle& map, Rng& rng, const Tolerances& tol = {},
                      const ChiOptions& options = {});

/// The unique vector on map(Pi(psi)) with the norm of psi and
/// <e_img|psi'> = chi(<e|psi>). Defined for psi not orthogonal to e.
StateVector pointwise_lift(const RayMapOracle& map, const StateVector& e,
                           const StateVector& e_img, ChiKind chi, const StateVector& psi,
                           const Tolerances& tol = {});

/// A Hilbert-space lift of a ray isometry: v -> matrix * v, or
/// v -> matrix * conj(v) when antiunitary. The reference pair records the
/// arbitrary phase choice the construction started from.
class LiftedSymmetry {
public:
    LiftedSymmetry(Matrix matrix, bool antiunitary, StateVector reference,
                   StateVector reference_image);

    Index dim() const noexcept { return matrix_.rows(); }
    const Matrix& matrix() const noexcept { return matrix_; }
    bool antiunitary() const noexcept { return antiunitary_; }
    ChiKind chi() const noexcept {
        return antiunitary_ ? ChiKind::conjugation : ChiKind::identity;
    }
    const StateVector& reference() const noexcept { return reference_; }
    const StateVector& reference_image() const noexcept { return reference_image_; }

    /// Action on raw amplitude vectors; zero maps to zero.
    Vector apply(const Vector& v) const;
    StateVector apply(const StateVector& v) const;
    Ray apply_ray(const Ray& r, const Tolerances& tol = {}) const;

private:
    Matrix matrix_;
    bool antiunitary_;
    StateVector reference_;
    StateVector reference_image_;
};

struct WignerOptions {
    std::size_t isometry_trials = 64;  // sampled pairs before construction
    std::size_t agreement_trials = 16;  // random rays compared after assembly
    ChiOptions chi;
};

/// Wigner's construction: fix a reference vector e (first basis vector by
/// default), pick the image representative e' with a recorded random phase,
/// classify chi, lift every basis vector pointwise -- through the
/// decomposition b = (b - e) + e when b is orthogonal to e -- and assemble
/// the columns into a unitary matrix.
LiftedSymmetry wigner_lift(const RayMapOracle& map, Rng& rng,
                           const std::optional<StateVector>& reference = std::nullopt,
                           const Tolerances& tol = {}, const WignerOptions& options = {});

struct W1W2Report {
    double w1_max_residual = 0.0;           // | ||T(A)|| - ||A|| |
    double w2_max_residual = 0.0;           // ||T(A+B) - T(A) - T(B)|| / (||A|| + ||B||)
    double four_term_max_residual = 0.0;    // A+B = C+D consistency
    double homogeneity_max_residual = 0.0;  // T(alpha A) = chi(alpha) T(A)
    double matrix_max_residual = 0.0;       // matrix action vs pointwise lift
};

/// Check intensity preservation, superposition preservation, the four-term
/// law and chi-homogeneity of the pointwise lift over random vectors, and
/// that the assembled matrix reproduces the pointwise lift.
W1W2Report verify_w1_w2(const RayMapOracle& map, const LiftedSymmetry& lift,
                        std::size_t trials, Rng& rng, const Tolerances& tol = {});

/// Im Delta samples along the two-stage deformation of C: first the
/// orthogonal component shrinks to zero, then the in-plane part rotates to
/// the pole of its hemisphere. The sign must stay constant throughout.
struct DeformationTrace {
    int sign;  // sign of Im Delta at the start
    std::vector<double> stage1;
    std::vector<double> stage2;
    bool constant_sign;
};

DeformationTrace imdelta_deformation_check(const Ray& ray_a, const Ray& ray_b,
                                           const Ray& ray_c, std::size_t steps,
                                           const Tolerances& tol = {});

}  // namespace raywig
