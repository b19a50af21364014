#include "raywig/pancharatnam.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace raywig {

namespace {

double principal_arg(Complex z) {
    double b = std::arg(z);
    if (b <= -std::numbers::pi) {
        b = std::numbers::pi;  // branch (-pi, pi]
    }
    return b;
}

}  // namespace

GeodesicTriangle::GeodesicTriangle(double a_, double b_, double c_, double angle_a_,
                                   const Tolerances& tol)
    : a(a_), b(b_), c(c_), angle_a(angle_a_) {
    const double pi = std::numbers::pi;
    for (double side : {a, b, c}) {
        if (!(side > 0.0) || !(side < pi)) {
            throw DegenerateTriangleError("triangle sides must lie strictly in (0, pi)");
        }
    }
    if (!(angle_a >= 0.0) || !(angle_a <= pi)) {
        throw DomainError("vertex angle must lie in [0, pi]");
    }
    const double cb = cos_beta_from_triangle(*this);
    if (std::abs(cb) > 1.0 + tol.eq_tol) {
        throw ConsistencyError("triangle data reconstructs |cos(beta)| = " +
                               std::to_string(std::abs(cb)) + " > 1");
    }
}

bool in_phase(const StateVector& a, const StateVector& b, const Tolerances& tol) {
    const Complex ip = inner_product(a, b);
    const double mag = std::abs(ip);
    if (mag <= tol.orth_tol * a.norm() * b.norm()) {
        throw OrthogonalityError("in-phase comparison undefined for orthogonal states");
    }
    return std::abs(ip.imag()) <= tol.eq_tol * mag && ip.real() > 0.0;
}

StateVector pancharatnam_lift(const StateVector& reference, const Ray& target,
                              const Tolerances& tol) {
    const Complex g = inner_product(reference, target.rep());
    const double mag = std::abs(g);
    if (mag <= tol.orth_tol * reference.norm()) {
        throw OrthogonalityError("Pancharatnam lift undefined: reference orthogonal to target");
    }
    const Complex scale = reference.norm() * std::conj(g) / mag;
    return StateVector(scale * target.rep().amps());
}

BargmannInvariant bargmann_invariant(const Ray& ray_a, const Ray& ray_b, const Ray& ray_c,
                                     const Tolerances& tol) {
    const Complex delta = inner_product(ray_a.rep(), ray_b.rep()) *
                          inner_product(ray_b.rep(), ray_c.rep()) *
                          inner_product(ray_c.rep(), ray_a.rep());
    const double rho = std::abs(delta);
    std::optional<double> beta;
    if (rho > tol.orth_tol) {
        beta = principal_arg(delta);
    }
    return {delta, rho, beta};
}

GeodesicSegment geodesic_between(const StateVector& a_vec, const Ray& b_ray,
                                 const Tolerances& tol) {
    if (std::abs(a_vec.norm() - 1.0) > tol.eq_tol) {
        throw DomainError("geodesic start must have unit norm");
    }
    const Ray a_ray = project_to_ray(a_vec, tol);
    const double ov = overlap(a_ray, b_ray);
    if (ov <= tol.orth_tol || ov >= 1.0 - tol.orth_tol) {
        throw DegenerateGeodesicError("geodesic endpoints must be distinct, non-orthogonal rays");
    }
    StateVector end = pancharatnam_lift(a_vec, b_ray, tol);
    const double length = 2.0 * std::acos(std::clamp(ov, 0.0, 1.0));
    // <a|end> = cos(length/2) is real positive, so this is the orthogonal
    // component of |B> normalized by sin(length/2).
    Vector mu = end.amps() - std::cos(0.5 * length) * a_vec.amps();
    StateVector mu_hat(mu / std::sin(0.5 * length));
    return {a_vec, std::move(end), std::move(mu_hat), length};
}

StateVector horizontal_geodesic(const StateVector& a_vec, const Ray& b_ray, double lambda,
                                const Tolerances& tol) {
    if (!(lambda >= 0.0) || !(lambda <= 1.0)) {
        throw DomainError("geodesic parameter must lie in [0, 1]");
    }
    const GeodesicSegment seg = geodesic_between(a_vec, b_ray, tol);
    const double half = 0.5 * lambda * seg.length;
    return StateVector(std::cos(half) * seg.start.amps() + std::sin(half) * seg.mu_hat.amps());
}

StateVector discrete_lift(const std::vector<Ray>& curve, const StateVector& start,
                          const Tolerances& tol) {
    if (curve.empty()) {
        throw DomainError("discrete lift needs at least one ray");
    }
    if (!same_ray(project_to_ray(start, tol), curve.front(), tol)) {
        throw DomainError("start vector does not lie on the first ray of the curve");
    }
    StateVector v = start;
    for (std::size_t i = 1; i < curve.size(); ++i) {
        try {
            v = pancharatnam_lift(v, curve[i], tol);
        } catch (const OrthogonalityError&) {
            throw OrthogonalityError(
                "consecutive orthogonal rays at index " + std::to_string(i),
                static_cast<std::ptrdiff_t>(i));
        }
    }
    return v;
}

GeodesicTriangle triangle_geometry(const Ray& ray_a, const Ray& ray_b, const Ray& ray_c,
                                   const Tolerances& tol) {
    const double ov_bc = overlap(ray_b, ray_c);
    const double ov_ca = overlap(ray_c, ray_a);
    const double ov_ab = overlap(ray_a, ray_b);
    for (double ov : {ov_bc, ov_ca, ov_ab}) {
        if (ov <= tol.orth_tol || ov >= 1.0 - tol.orth_tol) {
            throw DegenerateTriangleError(
                "triangle rays must be pairwise distinct and non-orthogonal");
        }
    }
    const double a = 2.0 * std::acos(ov_bc);
    const double b = 2.0 * std::acos(ov_ca);
    const double c = 2.0 * std::acos(ov_ab);
    const BargmannInvariant inv = bargmann_invariant(ray_a, ray_b, ray_c, tol);
    const double beta = std::arg(inv.delta);  // rho > orth_tol^3 > 0 here
    double cos_angle = (std::cos(0.5 * a) * std::cos(beta) -
                        std::cos(0.5 * b) * std::cos(0.5 * c)) /
                       (std::sin(0.5 * c) * std::sin(0.5 * b));
    if (std::abs(cos_angle) > 1.0 + tol.eq_tol) {
        throw ConsistencyError("vertex angle cosine out of range: " + std::to_string(cos_angle));
    }
    cos_angle = std::clamp(cos_angle, -1.0, 1.0);
    return GeodesicTriangle(a, b, c, std::acos(cos_angle), tol);
}

double cos_beta_from_triangle(const GeodesicTriangle& tri) {
    return (std::cos(tri.angle_a) * std::sin(0.5 * tri.c) * std::sin(0.5 * tri.b) +
            std::cos(0.5 * tri.b) * std::cos(0.5 * tri.c)) /
           std::cos(0.5 * tri.a);
}

}  // namespace raywig
