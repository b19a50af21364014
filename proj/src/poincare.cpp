#include "raywig/poincare.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "raywig/pancharatnam.hpp"

namespace raywig {

namespace {

struct Vec3 {
    double x, y, z;
};

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

Vec3 sub(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }

Vec3 scale(const Vec3& a, double s) { return {a.x * s, a.y * s, a.z * s}; }

Vec3 to_vec(const SpherePoint& p) { return {p.x, p.y, p.z}; }

// Angle at vertex p between the geodesics toward q and r, via tangent-plane
// projections and atan2 (well conditioned near 0 and pi).
double vertex_angle(const Vec3& p, const Vec3& q, const Vec3& r) {
    const Vec3 tq = sub(q, scale(p, dot(p, q)));
    const Vec3 tr = sub(r, scale(p, dot(p, r)));
    return std::atan2(norm(cross(tq, tr)), dot(tq, tr));
}

}  // namespace

SpherePoint::SpherePoint(double x_, double y_, double z_, const Tolerances& tol)
    : x(x_), y(y_), z(z_) {
    const double n2 = x * x + y * y + z * z;
    if (!std::isfinite(n2) || std::abs(n2 - 1.0) > 2.0 * tol.eq_tol) {
        throw DomainError("sphere point must be a unit 3-vector");
    }
}

SpherePoint bloch_map(const Ray& r, const Tolerances& tol) {
    if (r.dim() != 2) {
        throw DimensionError("bloch_map requires a two-state ray");
    }
    const Complex a = r.rep().amps()[0];
    const Complex b = r.rep().amps()[1];
    const Complex ab = std::conj(a) * b;
    return SpherePoint(2.0 * ab.real(), 2.0 * ab.imag(), std::norm(a) - std::norm(b), tol);
}

double angle_between(const SpherePoint& p, const SpherePoint& q) {
    return std::acos(std::clamp(dot(to_vec(p), to_vec(q)), -1.0, 1.0));
}

double solid_angle(const SpherePoint& p1, const SpherePoint& p2, const SpherePoint& p3,
                   const Tolerances& tol) {
    const Vec3 a = to_vec(p1);
    const Vec3 b = to_vec(p2);
    const Vec3 c = to_vec(p3);
    for (double d : {dot(a, b), dot(b, c), dot(c, a)}) {
        if (1.0 - std::abs(d) < tol.orth_tol) {
            throw DegenerateTriangleError("coincident or antipodal sphere points");
        }
    }
    const double excess = vertex_angle(a, b, c) + vertex_angle(b, c, a) +
                          vertex_angle(c, a, b) - std::numbers::pi;
    const double orient = dot(a, cross(b, c));
    return orient < 0.0 ? -excess : excess;
}

HalfSolidAngleReport check_half_solid_angle(const Ray& ray_a, const Ray& ray_b,
                                            const Ray& ray_c, const Tolerances& tol) {
    const BargmannInvariant inv = bargmann_invariant(ray_a, ray_b, ray_c, tol);
    if (!inv.beta) {
        throw DegenerateTriangleError("excess phase undefined: an orthogonal ray pair");
    }
    const double omega =
        solid_angle(bloch_map(ray_a, tol), bloch_map(ray_b, tol), bloch_map(ray_c, tol), tol);
    const double half = kHolonomySign * 0.5 * omega;
    return {*inv.beta, omega, half, kHolonomySign, std::abs(*inv.beta - half)};
}

double small_circle_phase(double theta, int n_points, const Tolerances& tol) {
    if (!(theta > 0.0) || !(theta < std::numbers::pi)) {
        throw DomainError("polar angle must lie strictly in (0, pi)");
    }
    if (n_points < 3) {
        throw DomainError("a closed loop needs at least 3 points");
    }
    const double ca = std::cos(0.5 * theta);
    const double sa = std::sin(0.5 * theta);
    std::vector<Ray> loop;
    loop.reserve(static_cast<std::size_t>(n_points) + 1);
    for (int k = 0; k < n_points; ++k) {
        const double phi = 2.0 * std::numbers::pi * k / n_points;
        Vector v(2);
        v[0] = Complex(ca, 0.0);
        v[1] = std::polar(sa, phi);
        loop.emplace_back(StateVector(std::move(v)), tol);
    }
    loop.push_back(loop.front());
    const StateVector start = loop.front().rep();
    const StateVector final = discrete_lift(loop, start, tol);
    // Transport multiplies by exp(-i beta); report the loop's excess phase.
    return -std::arg(inner_product(start, final));
}

}  // namespace raywig
