#include <doctest.h>

#include <numbers>

#include "raywig/pancharatnam.hpp"
#include "raywig/random.hpp"
#include "test_helpers.hpp"

using namespace raywig;
using namespace raywig::testing;

namespace {

constexpr double kPi = std::numbers::pi;

// Independent oracle for the vertex angle at A: re-phase b and c in phase
// with a, Gram-Schmidt both against a, and take Re of the frame product.
// This never touches the Bargmann-phase route used by triangle_geometry.
double vertex_cos_angle_oracle(const Ray& ra, const Ray& rb, const Ray& rc) {
    const Vector& a = ra.rep().amps();
    auto frame = [&](Vector v) {
        const Complex g = a.dot(v);
        v *= std::conj(g) / std::abs(g);
        Vector mu = v - a * a.dot(v);
        return Vector(mu / mu.norm());
    };
    const Vector mu_b = frame(rb.rep().amps());
    const Vector mu_c = frame(rc.rep().amps());
    return mu_b.dot(mu_c).real();
}

std::array<Ray, 3> random_triple(Index dim, Rng& rng) {
    for (;;) {
        const Ray a = random_ray(dim, rng);
        const Ray b = random_ray(dim, rng);
        const Ray c = random_ray(dim, rng);
        bool ok = true;
        for (double ov : {overlap(a, b), overlap(b, c), overlap(c, a)}) {
            if (ov <= 1e-6 || ov >= 1.0 - 1e-6) {
                ok = false;
            }
        }
        if (ok) {
            return {a, b, c};
        }
    }
}

}  // namespace

TEST_SUITE("pancharatnam") {

TEST_CASE("in-phase criterion") {
    const StateVector e0 = make_state({1.0, 0.0});
    CHECK(in_phase(e0, make_state({kInvSqrt2, kInvSqrt2})));
    CHECK_FALSE(in_phase(e0, make_state({kInvSqrt2 * kI, kInvSqrt2 * kI})));
    CHECK_THROWS_AS(in_phase(e0, make_state({0.0, 1.0})), OrthogonalityError);
}

TEST_CASE("Pancharatnam lift matches phase and size") {
    const StateVector e0 = make_state({1.0, 0.0});
    const StateVector lifted = pancharatnam_lift(e0, octant_b());
    CHECK(vectors_close(lifted.amps(), make_state({kInvSqrt2, kInvSqrt2}).amps()));

    const StateVector from_phased = pancharatnam_lift(e0, make_ray({kI, kI}));
    CHECK(vectors_close(from_phased.amps(), make_state({kInvSqrt2, kInvSqrt2}).amps()));

    const StateVector doubled = pancharatnam_lift(make_state({2.0, 0.0}), octant_b());
    const double s2 = std::sqrt(2.0);
    CHECK(vectors_close(doubled.amps(), make_state({s2, s2}).amps()));

    CHECK_THROWS_AS(pancharatnam_lift(e0, make_ray({0.0, 1.0})), OrthogonalityError);
}

TEST_CASE("lift is the unique in-phase equal-norm representative") {
    Rng rng(31);
    for (int t = 0; t < 50; ++t) {
        const StateVector ref(2.0 * random_state(4, rng).amps());
        const Ray target = random_ray(4, rng);
        if (overlap(project_to_ray(ref), target) < 1e-3) {
            continue;
        }
        const StateVector v = pancharatnam_lift(ref, target);
        CHECK(same_ray(project_to_ray(v), target));
        CHECK(close(v.norm(), ref.norm()));
        CHECK(in_phase(ref, v));
    }
}

TEST_CASE("Bargmann invariant on the octant triple") {
    const BargmannInvariant inv = bargmann_invariant(octant_a(), octant_b(), octant_c());
    CHECK(close(inv.delta, Complex(0.25, 0.25)));
    CHECK(close(inv.rho, std::sqrt(2.0) / 4.0));
    REQUIRE(inv.beta.has_value());
    CHECK(close(*inv.beta, kPi / 4.0));

    const BargmannInvariant trivial = bargmann_invariant(octant_a(), octant_a(), octant_a());
    CHECK(close(trivial.delta, Complex(1.0)));
    CHECK(close(*trivial.beta, 0.0));

    const BargmannInvariant dead =
        bargmann_invariant(octant_a(), make_ray({0.0, 1.0}), octant_c());
    CHECK(close(dead.rho, 0.0));
    CHECK_FALSE(dead.beta.has_value());
}

TEST_CASE("Bargmann invariant is gauge invariant, cyclic, and conjugates on reversal") {
    Rng rng(17);
    std::uniform_real_distribution<double> mag(0.1, 10.0);
    for (int t = 0; t < 1000; ++t) {
        const Index dim = 2 + static_cast<Index>(t % 4);
        const StateVector v1 = random_state(dim, rng);
        const StateVector v2 = random_state(dim, rng);
        const StateVector v3 = random_state(dim, rng);
        const Ray a = project_to_ray(v1);
        const Ray b = project_to_ray(v2);
        const Ray c = project_to_ray(v3);
        const Complex abc = bargmann_invariant(a, b, c).delta;

        const Ray ar(StateVector(mag(rng) * random_phase(rng) * v1.amps()));
        const Ray br(StateVector(mag(rng) * random_phase(rng) * v2.amps()));
        const Ray cr(StateVector(mag(rng) * random_phase(rng) * v3.amps()));
        CHECK(close(bargmann_invariant(ar, br, cr).delta, abc, 1e-10));

        CHECK(close(bargmann_invariant(b, c, a).delta, abc, 1e-12));
        CHECK(close(bargmann_invariant(c, a, b).delta, abc, 1e-12));
        CHECK(close(bargmann_invariant(a, c, b).delta, std::conj(abc), 1e-12));
    }
}

TEST_CASE("geodesic frame invariants") {
    Rng rng(43);
    for (int t = 0; t < 50; ++t) {
        const StateVector a = random_state(3, rng);
        const Ray b = random_ray(3, rng);
        const double ov = overlap(project_to_ray(a), b);
        if (ov < 1e-3 || ov > 1.0 - 1e-3) {
            continue;
        }
        const GeodesicSegment seg = geodesic_between(a, b);
        CHECK(in_phase(seg.start, seg.end));
        CHECK(std::abs(inner_product(seg.start, seg.mu_hat)) < 1e-12);
        CHECK(close(seg.mu_hat.norm(), 1.0));
        const Vector rebuilt = std::cos(0.5 * seg.length) * seg.start.amps() +
                               std::sin(0.5 * seg.length) * seg.mu_hat.amps();
        CHECK(vectors_close(rebuilt, seg.end.amps(), 1e-12));
    }
}

TEST_CASE("horizontal geodesic endpoints and midpoint") {
    const StateVector a = make_state({1.0, 0.0});
    CHECK_THROWS_AS(horizontal_geodesic(a, make_ray({0.0, 1.0}), 0.5),
                    DegenerateGeodesicError);
    CHECK_THROWS_AS(horizontal_geodesic(a, octant_b(), 1.5), DomainError);
    CHECK_THROWS_AS(horizontal_geodesic(make_state({2.0, 0.0}), octant_b(), 0.5), DomainError);

    CHECK(vectors_close(horizontal_geodesic(a, octant_b(), 0.0).amps(), a.amps()));
    CHECK(vectors_close(horizontal_geodesic(a, octant_b(), 1.0).amps(),
                        pancharatnam_lift(a, octant_b()).amps()));
    // c = pi/2, mu_hat = (0, 1): the midpoint sits at polar angle pi/8
    CHECK(vectors_close(horizontal_geodesic(a, octant_b(), 0.5).amps(),
                        make_state({std::cos(kPi / 8.0), std::sin(kPi / 8.0)}).amps()));
}

TEST_CASE("horizontality by finite differences") {
    Rng rng(3);
    const StateVector a = random_state(4, rng);
    Ray b = random_ray(4, rng);
    while (overlap(project_to_ray(a), b) < 1e-2) {
        b = random_ray(4, rng);
    }
    const double h = 1e-5;
    const GeodesicSegment seg = geodesic_between(a, b);
    for (int k = 1; k <= 50; ++k) {
        const double lam = static_cast<double>(k) / 51.0;
        const Vector plus = horizontal_geodesic(a, b, lam + h).amps();
        const Vector minus = horizontal_geodesic(a, b, lam - h).amps();
        const Vector derivative = (plus - minus) / (2.0 * h);
        const Vector gamma = horizontal_geodesic(a, b, lam).amps();
        CHECK(std::abs(gamma.dot(derivative)) < 1e-6);
    }
    // tangent norm at zero is c/2
    const Vector forward = (horizontal_geodesic(a, b, h).amps() - a.amps()) / h;
    CHECK(close(forward.norm(), 0.5 * seg.length, 1e-4));
}

TEST_CASE("discrete lift follows the geodesic rule") {
    const StateVector start = make_state({1.0, 0.0});
    CHECK(vectors_close(discrete_lift({octant_a()}, start).amps(), start.amps()));

    Rng rng(29);
    for (Index dim : {2, 4, 8}) {
        const StateVector a = random_state(dim, rng);
        Ray b = random_ray(dim, rng);
        double ov = overlap(project_to_ray(a), b);
        while (ov < 1e-3 || ov > 1.0 - 1e-3) {
            b = random_ray(dim, rng);
            ov = overlap(project_to_ray(a), b);
        }
        const StateVector endpoint = horizontal_geodesic(a, b, 1.0);
        for (std::size_t n : {std::size_t{2}, std::size_t{5}, std::size_t{37}}) {
            std::vector<Ray> curve;
            for (std::size_t k = 0; k < n; ++k) {
                const double lam = static_cast<double>(k) / static_cast<double>(n - 1);
                curve.push_back(project_to_ray(horizontal_geodesic(a, b, lam)));
            }
            CHECK(vectors_close(discrete_lift(curve, a).amps(), endpoint.amps(), 1e-10));
        }
    }
}

TEST_CASE("closed-triangle holonomy is exp(-i beta)") {
    const StateVector start = make_state({1.0, 0.0});
    const StateVector back =
        discrete_lift({octant_a(), octant_b(), octant_c(), octant_a()}, start);
    const Complex expected = std::polar(1.0, -kPi / 4.0);
    CHECK(vectors_close(back.amps(), expected * start.amps(), 1e-12));

    Rng rng(57);
    for (int t = 0; t < 100; ++t) {
        const auto [a, b, c] = random_triple(3, rng);
        const BargmannInvariant inv = bargmann_invariant(a, b, c);
        const StateVector out = discrete_lift({a, b, c, a}, a.rep());
        const Complex factor = inner_product(a.rep(), out);
        CHECK(close(factor, std::polar(1.0, -*inv.beta), 1e-10));
    }
}

TEST_CASE("discrete lift reports the orthogonal segment") {
    const StateVector start = make_state({1.0, 0.0});
    try {
        discrete_lift({octant_a(), octant_b(), make_ray({1.0, -1.0})}, start);
        FAIL("expected OrthogonalityError");
    } catch (const OrthogonalityError& e) {
        CHECK(e.index() == 2);
    }
}

TEST_CASE("triangle geometry of the octant triple") {
    const GeodesicTriangle tri = triangle_geometry(octant_a(), octant_b(), octant_c());
    CHECK(close(tri.a, kPi / 2.0));
    CHECK(close(tri.b, kPi / 2.0));
    CHECK(close(tri.c, kPi / 2.0));
    CHECK(close(tri.angle_a, kPi / 2.0));
    CHECK(close(cos_beta_from_triangle(tri), kInvSqrt2));
}

TEST_CASE("triangle geometry rejects degenerate triples") {
    CHECK_THROWS_AS(triangle_geometry(octant_a(), octant_a(), octant_b()),
                    DegenerateTriangleError);
    CHECK_THROWS_AS(triangle_geometry(octant_a(), make_ray({0.0, 1.0}), octant_b()),
                    DegenerateTriangleError);
    // nearly-equal pair collapses side c
    const Ray nearly(make_state({1.0, 1e-9}));
    CHECK_THROWS_AS(triangle_geometry(octant_a(), nearly, octant_b()),
                    DegenerateTriangleError);
}

TEST_CASE("vertex angle agrees with the tangent-frame oracle") {
    Rng rng(71);
    for (int t = 0; t < 500; ++t) {
        const Index dim = 2 + static_cast<Index>(t % 7);
        const auto [a, b, c] = random_triple(dim, rng);
        const GeodesicTriangle tri = triangle_geometry(a, b, c);
        CHECK(tri.angle_a >= 0.0);
        CHECK(tri.angle_a <= kPi);
        CHECK(close(std::cos(tri.angle_a), vertex_cos_angle_oracle(a, b, c), 1e-10));
    }
}

TEST_CASE("cos beta from triangle data equals the direct phase") {
    Rng rng(83);
    for (int t = 0; t < 500; ++t) {
        const Index dim = 2 + static_cast<Index>(t % 7);
        const auto [a, b, c] = random_triple(dim, rng);
        const GeodesicTriangle tri = triangle_geometry(a, b, c);
        const BargmannInvariant inv = bargmann_invariant(a, b, c);
        CHECK(close(cos_beta_from_triangle(tri), std::cos(*inv.beta), 1e-10));
    }
}

TEST_CASE("collapsing triangle loses its excess phase") {
    Rng rng(660);
    const Ray a = octant_a();
    const Ray b = make_ray({1.0, 1.0});
    const Ray c(StateVector(b.rep().amps() + 1e-5 * random_state(2, rng).amps()));
    const GeodesicTriangle tri = triangle_geometry(a, b, c);
    const BargmannInvariant inv = bargmann_invariant(a, b, c);
    CHECK(close(cos_beta_from_triangle(tri), 1.0, 1e-8));
    CHECK(std::abs(*inv.beta) < 1e-4);
}

TEST_CASE("triangle type validates its invariants") {
    CHECK_THROWS_AS(GeodesicTriangle(0.0, 1.0, 1.0, 0.5), DegenerateTriangleError);
    CHECK_THROWS_AS(GeodesicTriangle(1.0, kPi, 1.0, 0.5), DegenerateTriangleError);
    // sides that cannot close into a triangle: |cos beta| > 1
    CHECK_THROWS_AS(GeodesicTriangle(3.0, 0.1, 0.1, 0.0), ConsistencyError);
}

}  // TEST_SUITE
