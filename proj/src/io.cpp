#include "raywig/io.hpp"

#include <cmath>
#include <fstream>

namespace raywig {

namespace {

Json complex_pair(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex pair_to_complex(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ParseError("expected a [re, im] pair");
    }
    const Complex z(j[0].get<double>(), j[1].get<double>());
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw ParseError("non-finite amplitude");
    }
    return z;
}

Index read_dim(const Json& j) {
    if (!j.contains("dim") || !j["dim"].is_number_integer()) {
        throw ParseError("missing integer field \"dim\"");
    }
    const auto dim = j["dim"].get<std::int64_t>();
    if (dim < 1) {
        throw ParseError("\"dim\" must be a positive integer");
    }
    return static_cast<Index>(dim);
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Index j = 0; j < m.cols(); ++j) {
            row.push_back(complex_pair(m(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j, Index dim) {
    if (!j.is_array() || static_cast<Index>(j.size()) != dim) {
        throw ParseError("\"matrix\" must have dim rows");
    }
    Matrix m(dim, dim);
    for (Index i = 0; i < dim; ++i) {
        const Json& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Index>(row.size()) != dim) {
            throw ParseError("matrix rows must have dim entries");
        }
        for (Index k = 0; k < dim; ++k) {
            m(i, k) = pair_to_complex(row[static_cast<std::size_t>(k)]);
        }
    }
    return m;
}

}  // namespace

Json state_to_json(const StateVector& v) {
    Json amps = Json::array();
    for (Index i = 0; i < v.dim(); ++i) {
        amps.push_back(complex_pair(v.amps()[i]));
    }
    return Json{{"dim", v.dim()}, {"amp", std::move(amps)}};
}

StateVector state_from_json(const Json& j) {
    const Index dim = read_dim(j);
    if (!j.contains("amp") || !j["amp"].is_array() ||
        static_cast<Index>(j["amp"].size()) != dim) {
        throw ParseError("\"amp\" must hold exactly dim [re, im] pairs");
    }
    Vector v(dim);
    for (Index i = 0; i < dim; ++i) {
        v[i] = pair_to_complex(j["amp"][static_cast<std::size_t>(i)]);
    }
    try {
        return StateVector(std::move(v));
    } catch (const Error& e) {
        throw ParseError(std::string("invalid state vector: ") + e.what());
    }
}

Json ray_to_json(const Ray& r) { return state_to_json(r.rep()); }

Ray ray_from_json(const Json& j, const Tolerances& tol) {
    try {
        return Ray(state_from_json(j), tol);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(std::string("invalid ray: ") + e.what());
    }
}

Json oracle_to_json(const RayMapOracle& oracle) {
    if (!oracle.is_matrix_kind()) {
        throw DomainError("only matrix-kind oracles serialize to JSON");
    }
    const bool anti = oracle.kind() == RayMapOracle::Kind::matrix_antiunitary;
    return Json{{"dim", oracle.dim()},
                {"kind", anti ? "antiunitary" : "unitary"},
                {"matrix", matrix_to_json(oracle.matrix())}};
}

RayMapOracle oracle_from_json(const Json& j) {
    const Index dim = read_dim(j);
    if (!j.contains("kind") || !j["kind"].is_string()) {
        throw ParseError("missing string field \"kind\"");
    }
    const std::string kind = j["kind"].get<std::string>();
    if (kind != "unitary" && kind != "antiunitary") {
        throw ParseError("\"kind\" must be \"unitary\" or \"antiunitary\"");
    }
    if (!j.contains("matrix")) {
        throw ParseError("missing field \"matrix\"");
    }
    Matrix m = matrix_from_json(j["matrix"], dim);
    try {
        return kind == "unitary" ? RayMapOracle::unitary(std::move(m))
                                 : RayMapOracle::antiunitary(std::move(m));
    } catch (const Error& e) {
        throw ParseError(std::string("invalid oracle: ") + e.what());
    }
}

Json lift_to_json(const LiftedSymmetry& lift) {
    return Json{{"dim", lift.dim()},
                {"kind", lift.antiunitary() ? "antiunitary" : "unitary"},
                {"matrix", matrix_to_json(lift.matrix())},
                {"reference", state_to_json(lift.reference())},
                {"reference_image", state_to_json(lift.reference_image())},
                {"chi", chi_name(lift.chi())}};
}

LiftedSymmetry lift_from_json(const Json& j) {
    const Index dim = read_dim(j);
    if (!j.contains("kind") || !j["kind"].is_string() || !j.contains("matrix") ||
        !j.contains("reference") || !j.contains("reference_image")) {
        throw ParseError("lift JSON needs kind, matrix, reference and reference_image");
    }
    const bool anti = j["kind"].get<std::string>() == "antiunitary";
    try {
        return LiftedSymmetry(matrix_from_json(j["matrix"], dim), anti,
                              state_from_json(j["reference"]),
                              state_from_json(j["reference_image"]));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(std::string("invalid lift: ") + e.what());
    }
}

Json triangle_report_json(const GeodesicTriangle& tri, const BargmannInvariant& inv) {
    return Json{{"a", tri.a},
                {"b", tri.b},
                {"c", tri.c},
                {"angleA", tri.angle_a},
                {"rho", inv.rho},
                {"beta", inv.beta ? Json(*inv.beta) : Json(nullptr)},
                {"cos_beta_formula", cos_beta_from_triangle(tri)},
                {"cos_beta_direct", inv.beta ? Json(std::cos(*inv.beta)) : Json(nullptr)}};
}

Json half_solid_angle_json(const HalfSolidAngleReport& report) {
    return Json{{"beta", report.beta},
                {"solid_angle", report.solid_angle},
                {"half", report.half},
                {"sign", report.sign},
                {"residual", report.residual}};
}

Json fidelity_report_json(ChiKind chi, double fidelity, const W1W2Report& checks) {
    return Json{{"chi", chi_name(chi)},
                {"fidelity", fidelity},
                {"w1_max_residual", checks.w1_max_residual},
                {"w2_max_residual", checks.w2_max_residual}};
}

std::string chi_name(ChiKind chi) {
    return chi == ChiKind::identity ? "identity" : "conjugation";
}

ChiKind chi_from_name(const std::string& name) {
    if (name == "identity") {
        return ChiKind::identity;
    }
    if (name == "conjugation") {
        return ChiKind::conjugation;
    }
    throw ParseError("unknown chi \"" + name + "\"");
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot write " + path);
    }
    out << j.dump(2) << "\n";
}

}  // namespace raywig
