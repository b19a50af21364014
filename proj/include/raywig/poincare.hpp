#pragma once

#include "raywig/state.hpp"

namespace raywig {

/// Unit vector on the Poincare sphere.
struct SpherePoint {
    double x;
    double y;
    double z;

    SpherePoint(double x, double y, double z, const Tolerances& tol = {});
};

/// Relation between a two-state excess phase and the spherical triangle it
/// subtends: residual = |beta - sign * solid_angle / 2|.
struct HalfSolidAngleReport {
    double beta;
    double solid_angle;
    double half;  // sign * solid_angle / 2
    int sign;
    double residual;
};

/// Global orientation sign relating beta to half the solid angle under the
/// bloch_map axis convention. Fixed once by the octant triple
/// (1,0), (1,1)/sqrt2, (1,i)/sqrt2, for which beta = +pi/4 and the signed
/// solid angle is +pi/2.
inline constexpr int kHolonomySign = 1;

/// Embedding of two-state rays: for rep (alpha, beta) the image is
/// (2 Re(conj(alpha) beta), 2 Im(conj(alpha) beta), |alpha|^2 - |beta|^2).
/// Ray distance equals the great-circle angle between image points.
SpherePoint bloch_map(const Ray& r, const Tolerances& tol = {});

double angle_between(const SpherePoint& p, const SpherePoint& q);

/// Signed solid angle of the geodesic triangle (p1, p2, p3): spherical excess
/// from per-vertex angles, orientation from the scalar triple product.
/// Value in (-2 pi, 2 pi).
double solid_angle(const SpherePoint& p1, const SpherePoint& p2, const SpherePoint& p3,
                   const Tolerances& tol = {});

HalfSolidAngleReport check_half_solid_angle(const Ray& ray_a, const Ray& ray_b,
                                            const Ray& ray_c, const Tolerances& tol = {});

/// Excess phase of the closed loop of n equally spaced rays on the circle of
/// polar angle theta, computed by discrete Pancharatnam transport. Converges
/// to kHolonomySign * pi * (1 - cos theta), half the solid angle of the
/// enclosed cap, as n grows.
double small_circle_phase(double theta, int n_points, const Tolerances& tol = {});

}  // namespace raywig
