#include "raywig/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "raywig/pancharatnam.hpp"

namespace raywig {

namespace {

Ray table_lookup(const std::vector<std::pair<Ray, Ray>>& pairs, const Ray& r) {
    for (const auto& [key, value] : pairs) {
        if (same_ray(key, r)) {
            return value;
        }
    }
    throw DomainError("ray not in the table oracle's domain");
}

Ray random_domain_ray(const RayMapOracle& map, Rng& rng, const Tolerances& tol) {
    if (map.kind() == RayMapOracle::Kind::table) {
        const auto& pairs = map.table();
        std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
        return pairs[pick(rng)].first;
    }
    return random_ray(map.dim(), rng, tol);
}

}  // namespace

RayMapOracle RayMapOracle::unitary(Matrix m) {
    if (m.rows() < 1 || m.rows() != m.cols()) {
        throw DimensionError("oracle matrix must be square");
    }
    if (!m.allFinite()) {
        throw DomainError("oracle matrix has non-finite entries");
    }
    if (Eigen::FullPivLU<Matrix>(m).rank() < m.rows()) {
        throw DomainError("oracle matrix must be invertible");
    }
    RayMapOracle oracle(Kind::matrix_unitary, m.rows());
    oracle.matrix_ = std::move(m);
    return oracle;
}

RayMapOracle RayMapOracle::antiunitary(Matrix m) {
    RayMapOracle oracle = unitary(std::move(m));
    oracle.kind_ = Kind::matrix_antiunitary;
    return oracle;
}

RayMapOracle RayMapOracle::from_table(std::vector<std::pair<Ray, Ray>> pairs) {
    if (pairs.empty()) {
        throw DomainError("table oracle needs at least one pair");
    }
    const Index dim = pairs.front().first.dim();
    for (const auto& [key, value] : pairs) {
        if (key.dim() != dim || value.dim() != dim) {
            throw DimensionError("table oracle pairs must share one dimension");
        }
    }
    RayMapOracle oracle(Kind::table, dim);
    oracle.table_ = std::move(pairs);
    return oracle;
}

RayMapOracle RayMapOracle::from_function(Index dim, std::function<Ray(const Ray&)> fn) {
    if (dim < 1) {
        throw DimensionError("oracle dimension must be positive");
    }
    if (!fn) {
        throw DomainError("callable oracle needs a function");
    }
    RayMapOracle oracle(Kind::callable, dim);
    oracle.fn_ = std::move(fn);
    return oracle;
}

RayMapOracle RayMapOracle::compose(RayMapOracle lhs, RayMapOracle rhs) {
    if (lhs.dim() != rhs.dim()) {
        throw DimensionError("composed oracles must share one dimension");
    }
    const Index dim = lhs.dim();
    return from_function(dim, [lhs = std::move(lhs), rhs = std::move(rhs)](const Ray& r) {
        return lhs.apply(rhs.apply(r));
    });
}

Ray RayMapOracle::apply(const Ray& r) const {
    if (r.dim() != dim_) {
        throw DimensionError("ray dimension does not match the oracle");
    }
    switch (kind_) {
        case Kind::matrix_unitary:
            return Ray(StateVector(matrix_ * r.rep().amps()));
        case Kind::matrix_antiunitary:
            return Ray(StateVector(matrix_ * r.rep().amps().conjugate()));
        case Kind::table:
            return table_lookup(table_, r);
        case Kind::callable:
            return fn_(r);
    }
    throw DomainError("unreachable oracle kind");
}

const Matrix& RayMapOracle::matrix() const {
    if (!is_matrix_kind()) {
        throw DomainError("oracle has no matrix");
    }
    return matrix_;
}

const std::vector<std::pair<Ray, Ray>>& RayMapOracle::table() const {
    if (kind_ != Kind::table) {
        throw DomainError("oracle has no table");
    }
    return table_;
}

IsometryCheck is_isometry_sampled(const RayMapOracle& map, std::size_t trials, Rng& rng,
                                  const Tolerances& tol) {
    if (trials < 1) {
        throw DomainError("isometry check needs at least one trial");
    }
    double max_dev = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const Ray r1 = random_domain_ray(map, rng, tol);
        const Ray r2 = random_domain_ray(map, rng, tol);
        const double before = overlap(r1, r2);
        const double after = overlap(map.apply(r1), map.apply(r2));
        max_dev = std::max(max_dev, std::abs(after - before));
    }
    return {max_dev < tol.eq_tol, max_dev};
}

ChiKind determine_chi(const RayMapOracle& map, Rng& rng, const Tolerances& tol,
                      const ChiOptions& options) {
    if (map.dim() < 2) {
        throw DimensionError("chi is determined only for dim >= 2");
    }
    const double threshold = 10.0 * tol.orth_tol;
    std::optional<ChiKind> verdict;
    std::size_t found = 0;
    for (std::size_t draw = 0; draw < options.search_bound && found < options.cross_checks;
         ++draw) {
        const Ray a = random_domain_ray(map, rng, tol);
        const Ray b = random_domain_ray(map, rng, tol);
        const Ray c = random_domain_ray(map, rng, tol);
        const Complex delta = bargmann_invariant(a, b, c, tol).delta;
        if (std::abs(delta.imag()) <= threshold) {
            continue;
        }
        ++found;
        const Complex delta_img =
            bargmann_invariant(map.apply(a), map.apply(b), map.apply(c), tol).delta;
        const ChiKind kind = std::abs(delta_img - delta) < std::abs(delta_img - std::conj(delta))
                                 ? ChiKind::identity
                                 : ChiKind::conjugation;
        if (verdict && *verdict != kind) {
            throw NotIsometryError("chi classification disagrees across triples");
        }
        verdict = kind;
    }
    if (!verdict) {
        throw SearchExhaustedError("no triple with Im Delta away from zero; oracle degenerate?");
    }
    return *verdict;
}

StateVector pointwise_lift(const RayMapOracle& map, const StateVector& e,
                           const StateVector& e_img, ChiKind chi, const StateVector& psi,
                           const Tolerances& tol) {
    if (e.dim() != map.dim() || e_img.dim() != map.dim() || psi.dim() != map.dim()) {
        throw DimensionError("lift operands do not match the oracle dimension");
    }
    const Complex e_psi = inner_product(e, psi);
    if (std::abs(e_psi) <= tol.orth_tol * e.norm() * psi.norm()) {
        throw NotInPcError("psi is orthogonal to the reference vector");
    }
    if (std::abs(e_img.norm() - e.norm()) > tol.eq_tol * e.norm()) {
        throw DomainError("reference image must have the norm of the reference");
    }
    if (!same_ray(project_to_ray(e_img, tol), map.apply(project_to_ray(e, tol)), tol)) {
        throw DomainError("reference image does not lie on the image ray of the reference");
    }
    const Ray image = map.apply(project_to_ray(psi, tol));
    const Complex g = inner_product(e_img, image.rep());
    if (std::abs(g) <= tol.orth_tol * e_img.norm()) {
        throw NotIsometryError("image ray became orthogonal to the reference image");
    }
    // Amplitude from norm preservation, phase from <e_img|psi'> = chi(<e|psi>).
    const Complex ratio = chi_apply(chi, e_psi) / g;
    const Complex scale = psi.norm() * ratio / std::abs(ratio);
    return StateVector(scale * image.rep().amps());
}

LiftedSymmetry::LiftedSymmetry(Matrix matrix, bool antiunitary, StateVector reference,
                               StateVector reference_image)
    : matrix_(std::move(matrix)),
      antiunitary_(antiunitary),
      reference_(std::move(reference)),
      reference_image_(std::move(reference_image)) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 1) {
        throw DimensionError("lift matrix must be square");
    }
    if (reference_.dim() != matrix_.rows() || reference_image_.dim() != matrix_.rows()) {
        throw DimensionError("reference vectors must match the lift dimension");
    }
}

Vector LiftedSymmetry::apply(const Vector& v) const {
    if (v.size() != dim()) {
        throw DimensionError("vector dimension does not match the lift");
    }
    return antiunitary_ ? Vector(matrix_ * v.conjugate()) : Vector(matrix_ * v);
}

StateVector LiftedSymmetry::apply(const StateVector& v) const {
    return StateVector(apply(v.amps()));
}

Ray LiftedSymmetry::apply_ray(const Ray& r, const Tolerances& tol) const {
    return Ray(apply(r.rep()), tol);
}

LiftedSymmetry wigner_lift(const RayMapOracle& map, Rng& rng,
                           const std::optional<StateVector>& reference, const Tolerances& tol,
                           const WignerOptions& options) {
    const Index dim = map.dim();
    if (dim < 2) {
        throw DimensionError("the construction needs dim >= 2");
    }
    const IsometryCheck iso = is_isometry_sampled(map, options.isometry_trials, rng, tol);
    if (!iso.isometry) {
        throw NotIsometryError("map distorts overlaps by " + std::to_string(iso.max_deviation));
    }

    const StateVector e = reference ? *reference : StateVector::basis(dim, 0);
    if (e.dim() != dim) {
        throw DimensionError("reference vector dimension does not match the oracle");
    }

    // The only arbitrariness of the construction: the phase of e'.
    const Ray e_image_ray = map.apply(project_to_ray(e, tol));
    const StateVector e_img(e.norm() * random_phase(rng) * e_image_ray.rep().amps());
    const ChiKind chi = determine_chi(map, rng, tol, options.chi);

    Matrix m(dim, dim);
    for (Index i = 0; i < dim; ++i) {
        const StateVector b = StateVector::basis(dim, i);
        const Complex e_b = inner_product(e, b);
        if (std::abs(e_b) > tol.orth_tol * e.norm()) {
            m.col(i) = pointwise_lift(map, e, e_img, chi, b, tol).amps();
        } else {
            // b is orthogonal to e; lift b - e instead (never orthogonal to e)
            // and restore by superposition.
            const StateVector shifted(b.amps() - e.amps());
            m.col(i) = pointwise_lift(map, e, e_img, chi, shifted, tol).amps() + e_img.amps();
        }
    }

    const double unitarity =
        (m.adjoint() * m - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
    if (unitarity > tol.eq_tol) {
        throw NotIsometryError("assembled lift is not unitary; deviation " +
                               std::to_string(unitarity));
    }
    LiftedSymmetry lift(std::move(m), chi == ChiKind::conjugation, e, e_img);
    for (std::size_t t = 0; t < options.agreement_trials; ++t) {
        const Ray r = random_domain_ray(map, rng, tol);
        if (!same_ray(lift.apply_ray(r, tol), map.apply(r), tol)) {
            throw NotIsometryError("lift disagrees with the oracle on a sampled ray");
        }
    }
    return lift;
}

W1W2Report verify_w1_w2(const RayMapOracle& map, const LiftedSymmetry& lift,
                        std::size_t trials, Rng& rng, const Tolerances& tol) {
    const Index dim = map.dim();
    const StateVector& e = lift.reference();
    const StateVector& e_img = lift.reference_image();
    const ChiKind chi = lift.chi();

    auto in_pc = [&](const Vector& v) {
        const double n = v.norm();
        return n > tol.orth_tol && std::abs(e.amps().dot(v)) > 100.0 * tol.orth_tol * n;
    };
    auto draw_pc = [&]() {
        std::uniform_real_distribution<double> radius(0.3, 2.0);
        for (;;) {
            Vector v = radius(rng) * random_state(dim, rng).amps();
            if (in_pc(v)) {
                return StateVector(std::move(v));
            }
        }
    };
    auto lifted = [&](const StateVector& v) {
        return pointwise_lift(map, e, e_img, chi, v, tol);
    };

    W1W2Report report;
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (std::size_t t = 0; t < trials; ++t) {
        const StateVector a = draw_pc();
        const StateVector ta = lifted(a);
        report.w1_max_residual =
            std::max(report.w1_max_residual, std::abs(ta.norm() - a.norm()));

        // W2: additivity through the lift.
        StateVector b = draw_pc();
        while (!in_pc(a.amps() + b.amps())) {
            b = draw_pc();
        }
        const StateVector sum(a.amps() + b.amps());
        const double w2 = (lifted(sum).amps() - ta.amps() - lifted(b).amps()).norm() /
                          (a.norm() + b.norm());
        report.w2_max_residual = std::max(report.w2_max_residual, w2);

        // Four-term law on a random split a + b = c + d.
        StateVector c = draw_pc();
        while (!in_pc(sum.amps() - c.amps())) {
            c = draw_pc();
        }
        const StateVector d(sum.amps() - c.amps());
        const double four = (ta.amps() + lifted(b).amps() - lifted(c).amps() -
                             lifted(d).amps())
                                .norm() /
                            (a.norm() + b.norm());
        report.four_term_max_residual = std::max(report.four_term_max_residual, four);

        // Homogeneity T(alpha a) = chi(alpha) T(a).
        Complex alpha(gauss(rng), gauss(rng));
        while (std::abs(alpha) < 0.1 || !in_pc(alpha * a.amps())) {
            alpha = Complex(gauss(rng), gauss(rng));
        }
        const StateVector scaled(alpha * a.amps());
        const double hom =
            (lifted(scaled).amps() - chi_apply(chi, alpha) * ta.amps()).norm() /
            (std::abs(alpha) * a.norm());
        report.homogeneity_max_residual = std::max(report.homogeneity_max_residual, hom);

        const double mat = (lift.apply(a.amps()) - ta.amps()).norm() / a.norm();
        report.matrix_max_residual = std::max(report.matrix_max_residual, mat);
    }
    return report;
}

DeformationTrace imdelta_deformation_check(const Ray& ray_a, const Ray& ray_b,
                                           const Ray& ray_c, std::size_t steps,
                                           const Tolerances& tol) {
    if (steps < 2) {
        throw DomainError("deformation needs at least two samples per stage");
    }
    const BargmannInvariant start = bargmann_invariant(ray_a, ray_b, ray_c, tol);
    if (std::abs(start.delta.imag()) <= tol.orth_tol) {
        throw OnBoundaryError("Im Delta vanishes at the start; C lies on the boundary circle");
    }
    const int sign = start.delta.imag() > 0.0 ? 1 : -1;

    // Orthonormal frame of the A-B plane with B's lift in phase with A, so
    // both project onto the y = 0 great circle of the plane's sphere.
    const StateVector& a = ray_a.rep();
    const GeodesicSegment seg = geodesic_between(a, ray_b, tol);
    const Vector& u1 = a.amps();
    const Vector& u2 = seg.mu_hat.amps();

    const Vector& c = ray_c.rep().amps();
    const Complex p = u1.dot(c);
    const Complex q = u2.dot(c);
    const Vector c_par = p * u1 + q * u2;
    const Vector c_perp = c - c_par;

    auto imdelta_at = [&](const Vector& v) {
        return bargmann_invariant(ray_a, ray_b, Ray(StateVector(v), tol), tol).delta.imag();
    };

    DeformationTrace trace{sign, {}, {}, true};
    trace.stage1.reserve(steps);
    trace.stage2.reserve(steps);

    // Stage 1: shrink the orthogonal component to zero.
    for (std::size_t k = 0; k < steps; ++k) {
        const double t = static_cast<double>(k) / static_cast<double>(steps - 1);
        trace.stage1.push_back(imdelta_at(c_par + (1.0 - t) * c_perp));
    }

    // Stage 2: rotate the in-plane part to the pole of its hemisphere along
    // a great circle of the plane's sphere.
    const double cn = std::sqrt(std::norm(p) + std::norm(q));
    const Complex ph = p / cn;
    const Complex qh = q / cn;
    const Complex pq = std::conj(ph) * qh;
    const double x0 = 2.0 * pq.real();
    const double y0 = 2.0 * pq.imag();
    const double z0 = std::norm(ph) - std::norm(qh);
    const double ys = static_cast<double>(sign);
    // Angle from (x0, y0, z0) to the pole (0, sign, 0).
    const double omega = std::acos(std::clamp(y0 * ys, -1.0, 1.0));
    for (std::size_t k = 0; k < steps; ++k) {
        const double t = static_cast<double>(k) / static_cast<double>(steps - 1);
        double x, y, z;
        if (omega < 1e-12) {
            x = x0;
            y = y0;
            z = z0;
        } else {
            const double w0 = std::sin((1.0 - t) * omega) / std::sin(omega);
            const double w1 = std::sin(t * omega) / std::sin(omega);
            x = w0 * x0;
            y = w0 * y0 + w1 * ys;
            z = w0 * z0;
        }
        const double polar = std::acos(std::clamp(z, -1.0, 1.0));
        const double azimuth = std::atan2(y, x);
        const Complex alpha(std::cos(0.5 * polar), 0.0);
        const Complex beta = std::polar(std::sin(0.5 * polar), azimuth);
        trace.stage2.push_back(imdelta_at(alpha * u1 + beta * u2));
    }

    for (const auto* stage : {&trace.stage1, &trace.stage2}) {
        for (double im : *stage) {
            if (im == 0.0 || (im > 0.0) != (sign > 0)) {
                trace.constant_sign = false;
            }
        }
    }
    return trace;
}

}  // namespace raywig
