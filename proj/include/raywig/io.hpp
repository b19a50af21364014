#pragma once

#include <string>

#include <json.hpp>

#include "raywig/pancharatnam.hpp"
#include "raywig/poincare.hpp"
#include "raywig/state.hpp"
#include "raywig/wigner.hpp"

namespace raywig {

using Json = nlohmann::ordered_json;

/// `{"dim": n, "amp": [[re, im], ...]}`
Json state_to_json(const StateVector& v);
StateVector state_from_json(const Json& j);

/// A ray serializes as its canonical representative.
Json ray_to_json(const Ray& r);
Ray ray_from_json(const Json& j, const Tolerances& tol = {});

/// `{"dim": n, "kind": "unitary"|"antiunitary", "matrix": [[[re, im], ...], ...]}`
/// with row-major rows of [re, im] pairs.
Json oracle_to_json(const RayMapOracle& oracle);
RayMapOracle oracle_from_json(const Json& j);

/// Oracle form plus "reference", "reference_image" and "chi".
Json lift_to_json(const LiftedSymmetry& lift);
LiftedSymmetry lift_from_json(const Json& j);

/// `{"a","b","c","angleA","rho","beta","cos_beta_formula","cos_beta_direct"}`
Json triangle_report_json(const GeodesicTriangle& tri, const BargmannInvariant& inv);

/// `{"beta","solid_angle","half","sign","residual"}`
Json half_solid_angle_json(const HalfSolidAngleReport& report);

/// `{"chi","fidelity","w1_max_residual","w2_max_residual"}`
Json fidelity_report_json(ChiKind chi, double fidelity, const W1W2Report& checks);

std::string chi_name(ChiKind chi);
ChiKind chi_from_name(const std::string& name);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace raywig
