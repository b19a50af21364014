#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "raywig/state.hpp"

namespace raywig::suites {

/// One property of a suite: its worst residual over `count` checks and the
/// threshold it must stay below.
struct PropertyCheck {
    std::string name;
    std::size_t count;
    double max_residual;
    double threshold;
    bool pass;
};

struct SuiteReport {
    std::string suite;
    std::vector<PropertyCheck> checks;

    bool pass() const;
};

/// Suite parameters. Leaving dim or trials unset runs the suite's pinned
/// defaults (the dimension sweeps and trial counts the thresholds were set
/// for). Per-trial sub-seeds derive from (seed, trial index), so parallel
/// and serial runs produce identical reports.
struct SuiteConfig {
    std::uint64_t seed = 42;
    std::optional<Index> dim;
    std::optional<std::size_t> trials;
    Tolerances tol;
    bool parallel = false;
};

SuiteReport run_gauge(const SuiteConfig& config);
SuiteReport run_triangle(const SuiteConfig& config);
SuiteReport run_isometry(const SuiteConfig& config);
SuiteReport run_solid_angle(const SuiteConfig& config);
SuiteReport run_geodesic(const SuiteConfig& config);
SuiteReport run_continuum(const SuiteConfig& config);
SuiteReport run_reconstruction(const SuiteConfig& config);
SuiteReport run_appendix(const SuiteConfig& config);

const std::vector<std::string>& suite_names();

/// Dispatch by name; throws DomainError for unknown suites.
SuiteReport run_suite(const std::string& name, const SuiteConfig& config);

}  // namespace raywig::suites
