#pragma once

#include <optional>
#include <vector>

#include "raywig/state.hpp"

namespace raywig {

/// The gauge-invariant three-ray product Delta = <A|B><B|C><C|A> over unit
/// representatives, with modulus rho and excess phase beta = arg(Delta).
/// beta is populated only when rho exceeds orth_tol.
struct BargmannInvariant {
    Complex delta;
    double rho;
    std::optional<double> beta;  // in (-pi, pi]
};

/// Sides and one vertex angle of a ray-space geodesic triangle, radians.
/// a, b, c are the distances between rays (B,C), (C,A), (A,B); angle_a is the
/// angle between the geodesics meeting at A.
struct GeodesicTriangle {
    double a;
    double b;
    double c;
    double angle_a;

    GeodesicTriangle(double a, double b, double c, double angle_a,
                     const Tolerances& tol = {});
};

/// Horizontal lift data for the shortest geodesic from Pi(start) to a target
/// ray: end is the Pancharatnam lift of the target, mu_hat the unit vector
/// orthogonal to start spanning the lift plane, and length the ray distance.
struct GeodesicSegment {
    StateVector start;
    StateVector end;
    StateVector mu_hat;
    double length;
};

/// Pancharatnam criterion: <a|b> real and positive. Throws on orthogonal
/// inputs, where the comparison is undefined.
bool in_phase(const StateVector& a, const StateVector& b, const Tolerances& tol = {});

/// The unique representative of target that is in phase with reference and
/// has the same norm.
StateVector pancharatnam_lift(const StateVector& reference, const Ray& target,
                              const Tolerances& tol = {});

BargmannInvariant bargmann_invariant(const Ray& ray_a, const Ray& ray_b, const Ray& ray_c,
                                     const Tolerances& tol = {});

/// Frame of the horizontal lift from a_vec (unit norm) to b_ray; rejects
/// coincident or orthogonal endpoints.
GeodesicSegment geodesic_between(const StateVector& a_vec, const Ray& b_ray,
                                 const Tolerances& tol = {});

/// Point at parameter lambda in [0, 1] of the horizontal lift
/// cos(lambda c/2) |A> + sin(lambda c/2) |mu_hat>.
StateVector horizontal_geodesic(const StateVector& a_vec, const Ray& b_ray, double lambda,
                                const Tolerances& tol = {});

/// Left fold of pancharatnam_lift along a discrete curve of rays. Transport
/// around a closed triangle A->B->C->A multiplies the start vector by
/// exp(-i beta) with beta the phase of Delta_ABC.
StateVector discrete_lift(const std::vector<Ray>& curve, const StateVector& start,
                          const Tolerances& tol = {});

/// Sides from pairwise ray distances and the vertex angle at A from
/// cos(A) = (cos(a/2) cos(beta) - cos(b/2) cos(c/2)) / (sin(c/2) sin(b/2)).
GeodesicTriangle triangle_geometry(const Ray& ray_a, const Ray& ray_b, const Ray& ray_c,
                                   const Tolerances& tol = {});

/// cos(beta) = (cos(A) sin(c/2) sin(b/2) + cos(b/2) cos(c/2)) / cos(a/2).
/// Every quantity on the right is an isometry invariant of the triangle.
double cos_beta_from_triangle(const GeodesicTriangle& tri);

}  // namespace raywig
