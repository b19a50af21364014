#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "raywig/pancharatnam.hpp"
#include "raywig/poincare.hpp"
#include "raywig/random.hpp"
#include "raywig/state.hpp"
#include "raywig/wigner.hpp"

namespace py = pybind11;
using namespace raywig;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Ray-space geometry: Pancharatnam phases, Bargmann invariants, "
              "geodesic triangles and Wigner lifts of ray isometries";

    py::register_exception<Error>(m, "RaywigError", PyExc_RuntimeError);

    py::class_<Tolerances>(m, "Tolerances")
        .def(py::init<>())
        .def(py::init([](double eq, double orth, double canon) {
                 Tolerances t{eq, orth, canon};
                 t.validate();
                 return t;
             }),
             py::arg("eq_tol") = 1e-10, py::arg("orth_tol") = 1e-12,
             py::arg("canon_tol") = 1e-12)
        .def_readwrite("eq_tol", &Tolerances::eq_tol)
        .def_readwrite("orth_tol", &Tolerances::orth_tol)
        .def_readwrite("canon_tol", &Tolerances::canon_tol);

    py::class_<Rng>(m, "Rng", "Deterministic generator; all sampling takes one explicitly")
        .def(py::init<std::uint64_t>(), py::arg("seed"));

    py::class_<StateVector>(m, "StateVector")
        .def(py::init<Vector>(), py::arg("amplitudes"))
        .def_property_readonly("dim", &StateVector::dim)
        .def_property_readonly("amps", [](const StateVector& v) { return v.amps(); })
        .def_property_readonly("norm", &StateVector::norm)
        .def_static("basis", &StateVector::basis, py::arg("dim"), py::arg("i"))
        .def("__repr__", [](const StateVector& v) {
            std::ostringstream s;
            s << "StateVector(dim=" << v.dim() << ")";
            return s.str();
        });

    py::class_<Ray>(m, "Ray")
        .def(py::init<const StateVector&, const Tolerances&>(), py::arg("state"),
             py::arg("tol") = Tolerances{})
        .def_property_readonly("dim", &Ray::dim)
        .def_property_readonly("rep", &Ray::rep)
        .def("__eq__", [](const Ray& a, const Ray& b) { return same_ray(a, b); })
        .def("__repr__", [](const Ray& r) {
            std::ostringstream s;
            s << "Ray(dim=" << r.dim() << ")";
            return s.str();
        });

    m.def("inner_product", &inner_product, py::arg("a"), py::arg("b"),
          "Hermitian product <a|b>, conjugate-linear in the first argument");
    m.def("project_to_ray", &project_to_ray, py::arg("v"), py::arg("tol") = Tolerances{});
    m.def("overlap", &overlap, py::arg("r1"), py::arg("r2"));
    m.def("ray_distance", &ray_distance, py::arg("r1"), py::arg("r2"));
    m.def("same_ray", &same_ray, py::arg("r1"), py::arg("r2"), py::arg("tol") = Tolerances{});
    m.def("random_state", &random_state, py::arg("dim"), py::arg("rng"));
    m.def("random_ray", &random_ray, py::arg("dim"), py::arg("rng"),
          py::arg("tol") = Tolerances{});
    m.def("haar_unitary", &haar_unitary, py::arg("dim"), py::arg("rng"),
          "Haar-distributed unitary matrix");

    py::class_<BargmannInvariant>(m, "BargmannInvariant")
        .def_readonly("delta", &BargmannInvariant::delta)
        .def_readonly("rho", &BargmannInvariant::rho)
        .def_readonly("beta", &BargmannInvariant::beta)
        .def("__repr__", [](const BargmannInvariant& b) {
            std::ostringstream s;
            s << "BargmannInvariant(delta=" << b.delta.real() << (b.delta.imag() < 0 ? "-" : "+")
              << std::abs(b.delta.imag()) << "j)";
            return s.str();
        });

    py::class_<GeodesicTriangle>(m, "GeodesicTriangle")
        .def(py::init<double, double, double, double, const Tolerances&>(), py::arg("a"),
             py::arg("b"), py::arg("c"), py::arg("angle_a"), py::arg("tol") = Tolerances{})
        .def_readonly("a", &GeodesicTriangle::a)
        .def_readonly("b", &GeodesicTriangle::b)
        .def_readonly("c", &GeodesicTriangle::c)
        .def_readonly("angle_a", &GeodesicTriangle::angle_a);

    py::class_<GeodesicSegment>(m, "GeodesicSegment")
        .def_readonly("start", &GeodesicSegment::start)
        .def_readonly("end", &GeodesicSegment::end)
        .def_readonly("mu_hat", &GeodesicSegment::mu_hat)
        .def_readonly("length", &GeodesicSegment::length);

    m.def("in_phase", &in_phase, py::arg("a"), py::arg("b"), py::arg("tol") = Tolerances{});
    m.def("pancharatnam_lift", &pancharatnam_lift, py::arg("reference"), py::arg("target"),
          py::arg("tol") = Tolerances{});
    m.def("bargmann_invariant", &bargmann_invariant, py::arg("ray_a"), py::arg("ray_b"),
          py::arg("ray_c"), py::arg("tol") = Tolerances{});
    m.def("geodesic_between", &geodesic_between, py::arg("a_vec"), py::arg("b_ray"),
          py::arg("tol") = Tolerances{});
    m.def("horizontal_geodesic", &horizontal_geodesic, py::arg("a_vec"), py::arg("b_ray"),
          py::arg("lam"), py::arg("tol") = Tolerances{});
    m.def("discrete_lift", &discrete_lift, py::arg("curve"), py::arg("start"),
          py::arg("tol") = Tolerances{});
    m.def("triangle_geometry", &triangle_geometry, py::arg("ray_a"), py::arg("ray_b"),
          py::arg("ray_c"), py::arg("tol") = Tolerances{});
    m.def("cos_beta_from_triangle", &cos_beta_from_triangle, py::arg("triangle"));

    py::class_<SpherePoint>(m, "SpherePoint")
        .def(py::init<double, double, double, const Tolerances&>(), py::arg("x"), py::arg("y"),
             py::arg("z"), py::arg("tol") = Tolerances{})
        .def_readonly("x", &SpherePoint::x)
        .def_readonly("y", &SpherePoint::y)
        .def_readonly("z", &SpherePoint::z)
        .def("__repr__", [](const SpherePoint& p) {
            std::ostringstream s;
            s << "SpherePoint(" << p.x << ", " << p.y << ", " << p.z << ")";
            return s.str();
        });

    py::class_<HalfSolidAngleReport>(m, "HalfSolidAngleReport")
        .def_readonly("beta", &HalfSolidAngleReport::beta)
        .def_readonly("solid_angle", &HalfSolidAngleReport::solid_angle)
        .def_readonly("half", &HalfSolidAngleReport::half)
        .def_readonly("sign", &HalfSolidAngleReport::sign)
        .def_readonly("residual", &HalfSolidAngleReport::residual);

    m.attr("HOLONOMY_SIGN") = kHolonomySign;
    m.def("bloch_map", &bloch_map, py::arg("ray"), py::arg("tol") = Tolerances{});
    m.def("angle_between", &angle_between, py::arg("p"), py::arg("q"));
    m.def("solid_angle", &solid_angle, py::arg("p1"), py::arg("p2"), py::arg("p3"),
          py::arg("tol") = Tolerances{});
    m.def("check_half_solid_angle", &check_half_solid_angle, py::arg("ray_a"), py::arg("ray_b"),
          py::arg("ray_c"), py::arg("tol") = Tolerances{});
    m.def("small_circle_phase", &small_circle_phase, py::arg("theta"), py::arg("n_points"),
          py::arg("tol") = Tolerances{});

    py::enum_<ChiKind>(m, "ChiKind")
        .value("identity", ChiKind::identity)
        .value("conjugation", ChiKind::conjugation);
    m.def("chi_apply", &chi_apply, py::arg("chi"), py::arg("z"));

    py::class_<RayMapOracle>(m, "RayMapOracle")
        .def_static("unitary", &RayMapOracle::unitary, py::arg("matrix"))
        .def_static("antiunitary", &RayMapOracle::antiunitary, py::arg("matrix"))
        .def_static("from_table", &RayMapOracle::from_table, py::arg("pairs"))
        .def_static("from_function", &RayMapOracle::from_function, py::arg("dim"),
                    py::arg("fn"))
        .def_static("compose", &RayMapOracle::compose, py::arg("lhs"), py::arg("rhs"))
        .def("apply", &RayMapOracle::apply, py::arg("ray"))
        .def_property_readonly("dim", &RayMapOracle::dim)
        .def_property_readonly("is_matrix_kind", &RayMapOracle::is_matrix_kind)
        .def_property_readonly("matrix", &RayMapOracle::matrix);

    py::class_<IsometryCheck>(m, "IsometryCheck")
        .def_readonly("isometry", &IsometryCheck::isometry)
        .def_readonly("max_deviation", &IsometryCheck::max_deviation);

    py::class_<LiftedSymmetry>(m, "LiftedSymmetry")
        .def(py::init<Matrix, bool, StateVector, StateVector>(), py::arg("matrix"),
             py::arg("antiunitary"), py::arg("reference"), py::arg("reference_image"))
        .def_property_readonly("dim", &LiftedSymmetry::dim)
        .def_property_readonly("matrix", &LiftedSymmetry::matrix)
        .def_property_readonly("antiunitary", &LiftedSymmetry::antiunitary)
        .def_property_readonly("chi", &LiftedSymmetry::chi)
        .def_property_readonly("reference", &LiftedSymmetry::reference)
        .def_property_readonly("reference_image", &LiftedSymmetry::reference_image)
        .def("apply",
             [](const LiftedSymmetry& lift, const Vector& v) { return lift.apply(v); },
             py::arg("v"))
        .def("apply_ray", &LiftedSymmetry::apply_ray, py::arg("ray"),
             py::arg("tol") = Tolerances{});

    py::class_<W1W2Report>(m, "W1W2Report")
        .def_readonly("w1_max_residual", &W1W2Report::w1_max_residual)
        .def_readonly("w2_max_residual", &W1W2Report::w2_max_residual)
        .def_readonly("four_term_max_residual", &W1W2Report::four_term_max_residual)
        .def_readonly("homogeneity_max_residual", &W1W2Report::homogeneity_max_residual)
        .def_readonly("matrix_max_residual", &W1W2Report::matrix_max_residual);

    py::class_<DeformationTrace>(m, "DeformationTrace")
        .def_readonly("sign", &DeformationTrace::sign)
        .def_readonly("stage1", &DeformationTrace::stage1)
        .def_readonly("stage2", &DeformationTrace::stage2)
        .def_readonly("constant_sign", &DeformationTrace::constant_sign);

    py::class_<ChiOptions>(m, "ChiOptions")
        .def(py::init<>())
        .def_readwrite("search_bound", &ChiOptions::search_bound)
        .def_readwrite("cross_checks", &ChiOptions::cross_checks);

    m.def("is_isometry_sampled", &is_isometry_sampled, py::arg("map"), py::arg("trials"),
          py::arg("rng"), py::arg("tol") = Tolerances{});
    m.def("determine_chi", &determine_chi, py::arg("map"), py::arg("rng"),
          py::arg("tol") = Tolerances{}, py::arg("options") = ChiOptions{});
    m.def("pointwise_lift", &pointwise_lift, py::arg("map"), py::arg("e"), py::arg("e_img"),
          py::arg("chi"), py::arg("psi"), py::arg("tol") = Tolerances{});
    m.def(
        "wigner_lift",
        [](const RayMapOracle& map, Rng& rng, const std::optional<StateVector>& reference,
           const Tolerances& tol) { return wigner_lift(map, rng, reference, tol); },
        py::arg("map"), py::arg("rng"), py::arg("reference") = std::nullopt,
        py::arg("tol") = Tolerances{});
    m.def("verify_w1_w2", &verify_w1_w2, py::arg("map"), py::arg("lift"), py::arg("trials"),
          py::arg("rng"), py::arg("tol") = Tolerances{});
    m.def("imdelta_deformation_check", &imdelta_deformation_check, py::arg("ray_a"),
          py::arg("ray_b"), py::arg("ray_c"), py::arg("steps"), py::arg("tol") = Tolerances{});
}
