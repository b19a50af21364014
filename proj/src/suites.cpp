#include "raywig/suites.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <numbers>
#include <thread>

#include "raywig/pancharatnam.hpp"
#include "raywig/poincare.hpp"
#include "raywig/random.hpp"
#include "raywig/wigner.hpp"

namespace raywig::suites {

namespace {

constexpr double kPi = std::numbers::pi;

// Evaluate fn(0..total-1) into a vector, optionally across threads. Trials
// must be independent; determinism comes from per-trial sub-seeds.
template <typename T, typename Fn>
std::vector<T> map_trials(std::size_t total, bool parallel, Fn&& fn) {
    std::vector<T> out(total);
    const unsigned hw = std::thread::hardware_concurrency();
    if (!parallel || total < 2 || hw < 2) {
        for (std::size_t i = 0; i < total; ++i) {
            out[i] = fn(i);
        }
        return out;
    }
    const std::size_t workers = std::min<std::size_t>(hw, total);
    const std::size_t chunk = (total + workers - 1) / workers;
    std::vector<std::future<void>> futures;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(total, lo + chunk);
        if (lo >= hi) {
            break;
        }
        futures.push_back(std::async(std::launch::async, [&, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) {
                out[i] = fn(i);
            }
        }));
    }
    for (auto& f : futures) {
        f.get();
    }
    return out;
}

double max_of(const std::vector<double>& values) {
    double m = 0.0;
    for (double v : values) {
        m = std::max(m, v);
    }
    return m;
}

PropertyCheck residual_check(std::string name, std::size_t count, double max_residual,
                             double threshold) {
    const bool pass = max_residual < threshold;
    return {std::move(name), count, max_residual, threshold, pass};
}

PropertyCheck counting_check(std::string name, std::size_t count, std::size_t failures) {
    return {std::move(name), count, static_cast<double>(failures), 1.0, failures == 0};
}

std::vector<Index> dim_sweep(const SuiteConfig& config, Index lo, Index hi) {
    if (config.dim) {
        return {*config.dim};
    }
    std::vector<Index> dims;
    for (Index d = lo; d <= hi; ++d) {
        dims.push_back(d);
    }
    return dims;
}

// Random triple of rays with all pairwise overlaps away from 0 and 1.
std::array<Ray, 3> nondegenerate_triple(Index dim, Rng& rng, const Tolerances& tol) {
    for (;;) {
        const Ray a = random_ray(dim, rng, tol);
        const Ray b = random_ray(dim, rng, tol);
        const Ray c = random_ray(dim, rng, tol);
        const double margin = 1e-8;
        bool ok = true;
        for (double ov : {overlap(a, b), overlap(b, c), overlap(c, a)}) {
            if (ov <= margin || ov >= 1.0 - margin) {
                ok = false;
                break;
            }
        }
        if (ok) {
            return {a, b, c};
        }
    }
}

Complex random_rescale(Rng& rng) {
    std::uniform_real_distribution<double> logmag(std::log(0.1), std::log(10.0));
    return std::exp(logmag(rng)) * random_phase(rng);
}

}  // namespace

bool SuiteReport::pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const PropertyCheck& c) { return c.pass; });
}

SuiteReport run_gauge(const SuiteConfig& config) {
    const std::vector<Index> dims = dim_sweep(config, 2, 8);
    const std::size_t trials = config.trials.value_or(1000);
    const Tolerances tol = config.tol;
    const std::size_t total = dims.size() * trials;
    auto residuals = map_trials<double>(total, config.parallel, [&](std::size_t i) {
        Rng rng(subseed(config.seed, i));
        const Index dim = dims[i / trials];
        for (;;) {
            const StateVector v1 = random_state(dim, rng);
            const StateVector v2 = random_state(dim, rng);
            const StateVector v3 = random_state(dim, rng);
            const BargmannInvariant before = bargmann_invariant(
                project_to_ray(v1, tol), project_to_ray(v2, tol), project_to_ray(v3, tol), tol);
            if (before.rho < 1e-8) {
                continue;  // relative change meaningless near the zero set
            }
            const Ray r1(StateVector(random_rescale(rng) * v1.amps()), tol);
            const Ray r2(StateVector(random_rescale(rng) * v2.amps()), tol);
            const Ray r3(StateVector(random_rescale(rng) * v3.amps()), tol);
            const BargmannInvariant after = bargmann_invariant(r1, r2, r3, tol);
            return std::abs(after.delta - before.delta) / before.rho;
        }
    });
    return {"gauge", {residual_check("delta_relative_change", total, max_of(residuals), 1e-12)}};
}

SuiteReport run_triangle(const SuiteConfig& config) {
    const std::vector<Index> dims = dim_sweep(config, 2, 8);
    const std::size_t trials = config.trials.value_or(1000);
    const Tolerances tol = config.tol;
    const std::size_t total = dims.size() * trials;
    auto residuals = map_trials<double>(total, config.parallel, [&](std::size_t i) {
        Rng rng(subseed(config.seed, i));
        const auto [a, b, c] = nondegenerate_triple(dims[i / trials], rng, tol);
        const GeodesicTriangle tri = triangle_geometry(a, b, c, tol);
        const BargmannInvariant inv = bargmann_invariant(a, b, c, tol);
        return std::abs(cos_beta_from_triangle(tri) - std::cos(*inv.beta));
    });
    return {"triangle", {residual_check("cos_beta_identity", total, max_of(residuals), 1e-10)}};
}

SuiteReport run_isometry(const SuiteConfig& config) {
    const Index dim = config.dim.value_or(4);
    const std::size_t per_kind = config.trials.value_or(100);
    const Tolerances tol = config.tol;
    constexpr std::size_t kTriples = 10;

    struct TrialResult {
        double rho = 0.0;
        double re = 0.0;
        double im = 0.0;
    };
    auto run_kind = [&](bool antiunitary, std::uint64_t salt) {
        auto results =
            map_trials<TrialResult>(per_kind, config.parallel, [&](std::size_t i) {
                Rng rng(subseed(config.seed ^ salt, i));
                const Matrix u = haar_unitary(dim, rng);
                const RayMapOracle oracle =
                    antiunitary ? RayMapOracle::antiunitary(u) : RayMapOracle::unitary(u);
                TrialResult r;
                for (std::size_t k = 0; k < kTriples; ++k) {
                    const auto [a, b, c] = nondegenerate_triple(dim, rng, tol);
                    const Complex before = bargmann_invariant(a, b, c, tol).delta;
                    const Complex after =
                        bargmann_invariant(oracle.apply(a), oracle.apply(b), oracle.apply(c), tol)
                            .delta;
                    r.rho = std::max(r.rho, std::abs(std::abs(after) - std::abs(before)));
                    r.re = std::max(r.re, std::abs(after.real() - before.real()));
                    const double want_im = antiunitary ? -before.imag() : before.imag();
                    r.im = std::max(r.im, std::abs(after.imag() - want_im));
                }
                return r;
            });
        TrialResult worst;
        for (const auto& r : results) {
            worst.rho = std::max(worst.rho, r.rho);
            worst.re = std::max(worst.re, r.re);
            worst.im = std::max(worst.im, r.im);
        }
        return worst;
    };

    const TrialResult u = run_kind(false, 0x756e6974ULL);
    const TrialResult a = run_kind(true, 0x616e7469ULL);
    const std::size_t count = per_kind * kTriples;
    return {"isometry",
            {residual_check("rho_invariance", 2 * count, std::max(u.rho, a.rho), 1e-10),
             residual_check("re_delta_invariance", 2 * count, std::max(u.re, a.re), 1e-10),
             residual_check("im_delta_unitary", count, u.im, 1e-10),
             residual_check("im_delta_antiunitary_flip", count, a.im, 1e-10)}};
}

SuiteReport run_solid_angle(const SuiteConfig& config) {
    const std::size_t trials = config.trials.value_or(1000);
    const Tolerances tol = config.tol;

    const Ray a(StateVector((Vector(2) << 1.0, 0.0).finished()), tol);
    const Ray b(StateVector((Vector(2) << 1.0, 1.0).finished()), tol);
    const Ray c(StateVector((Vector(2) << Complex(1.0, 0.0), Complex(0.0, 1.0)).finished()),
                tol);
    const HalfSolidAngleReport octant = check_half_solid_angle(a, b, c, tol);

    auto residuals = map_trials<double>(trials, config.parallel, [&](std::size_t i) {
        Rng rng(subseed(config.seed, i));
        const auto [x, y, z] = nondegenerate_triple(2, rng, tol);
        return check_half_solid_angle(x, y, z, tol).residual;
    });
    return {"solid-angle",
            {residual_check("octant_beta", 1, std::abs(octant.beta - kPi / 4.0), 1e-9),
             residual_check("octant_solid_angle", 1, std::abs(octant.solid_angle - kPi / 2.0),
                            1e-9),
             residual_check("half_solid_angle_residual", trials, max_of(residuals), 1e-8)}};
}

SuiteReport run_geodesic(const SuiteConfig& config) {
    const std::size_t trials = config.trials.value_or(100);
    const Tolerances tol = config.tol;
    constexpr std::array<std::size_t, 3> kSamples = {2, 10, 100};

    auto residuals = map_trials<double>(trials, config.parallel, [&](std::size_t i) {
        Rng rng(subseed(config.seed, i));
        const Index dim = config.dim.value_or(2 + static_cast<Index>(i % 7));
        StateVector start = random_state(dim, rng);
        Ray target = random_ray(dim, rng, tol);
        double ov = overlap(project_to_ray(start, tol), target);
        while (ov <= 1e-6 || ov >= 1.0 - 1e-6) {
            target = random_ray(dim, rng, tol);
            ov = overlap(project_to_ray(start, tol), target);
        }
        const StateVector endpoint = horizontal_geodesic(start, target, 1.0, tol);
        double worst = 0.0;
        for (std::size_t n : kSamples) {
            std::vector<Ray> curve;
            curve.reserve(n);
            for (std::size_t k = 0; k < n; ++k) {
                const double lam = static_cast<double>(k) / static_cast<double>(n - 1);
                curve.push_back(
                    project_to_ray(horizontal_geodesic(start, target, lam, tol), tol));
            }
            const StateVector lifted = discrete_lift(curve, start, tol);
            worst = std::max(worst, (lifted.amps() - endpoint.amps()).norm());
        }
        return worst;
    });
    return {"geodesic",
            {residual_check("discrete_vs_horizontal", trials * kSamples.size(),
                            max_of(residuals), 1e-10)}};
}

SuiteReport run_continuum(const SuiteConfig& config) {
    const Tolerances tol = config.tol;
    constexpr std::array<int, 4> kPoints = {8, 32, 128, 512};
    const double theta = kPi / 3.0;
    const double limit = kHolonomySign * kPi * (1.0 - std::cos(theta));

    std::vector<double> errors;
    for (int n : kPoints) {
        errors.push_back(std::abs(small_circle_phase(theta, n, tol) - limit));
    }
    std::size_t non_monotone = 0;
    for (std::size_t i = 1; i < errors.size(); ++i) {
        if (errors[i] >= errors[i - 1]) {
            ++non_monotone;
        }
    }
    return {"continuum",
            {residual_check("cap_phase_error_n512", 1, errors.back(), 1e-3),
             counting_check("error_monotone_decrease", errors.size() - 1, non_monotone)}};
}

SuiteReport run_reconstruction(const SuiteConfig& config) {
    const std::size_t per_kind = config.trials.value_or(100);
    const Tolerances tol = config.tol;
    constexpr std::size_t kW1W2Trials = 500;

    struct TrialResult {
        bool chi_ok = false;
        double fidelity_defect = 1.0;
        double w1 = 0.0;
        double w2 = 0.0;
    };
    auto run_oracle = [&](std::size_t i) {
        const bool antiunitary = i >= per_kind;
        Rng rng(subseed(config.seed, i));
        const Index dim = config.dim.value_or(2 + static_cast<Index>(i % 5));
        const Matrix u = haar_unitary(dim, rng);
        const RayMapOracle oracle =
            antiunitary ? RayMapOracle::antiunitary(u) : RayMapOracle::unitary(u);
        const LiftedSymmetry lift = wigner_lift(oracle, rng, std::nullopt, tol);
        TrialResult r;
        r.chi_ok = lift.antiunitary() == antiunitary;
        r.fidelity_defect =
            std::abs(1.0 - std::abs((lift.matrix().adjoint() * u).trace()) /
                               static_cast<double>(dim));
        const W1W2Report checks = verify_w1_w2(oracle, lift, kW1W2Trials, rng, tol);
        r.w1 = checks.w1_max_residual;
        r.w2 = checks.w2_max_residual;
        return r;
    };
    auto results = map_trials<TrialResult>(2 * per_kind, config.parallel, run_oracle);

    std::size_t chi_wrong = 0;
    double fidelity = 0.0;
    double w1 = 0.0;
    double w2 = 0.0;
    for (const auto& r : results) {
        chi_wrong += r.chi_ok ? 0 : 1;
        fidelity = std::max(fidelity, r.fidelity_defect);
        w1 = std::max(w1, r.w1);
        w2 = std::max(w2, r.w2);
    }
    const std::size_t total = 2 * per_kind;
    return {"reconstruction",
            {counting_check("chi_misclassified", total, chi_wrong),
             residual_check("fidelity_defect", total, fidelity, 1e-9),
             residual_check("w1_max_residual", total * kW1W2Trials, w1, 1e-9),
             residual_check("w2_max_residual", total * kW1W2Trials, w2, 1e-9)}};
}

SuiteReport run_appendix(const SuiteConfig& config) {
    const std::size_t trials = config.trials.value_or(200);
    const Index dim = config.dim.value_or(3);
    const Tolerances tol = config.tol;
    constexpr std::size_t kSteps = 50;  // per stage

    auto flips = map_trials<std::size_t>(trials, config.parallel, [&](std::size_t i) {
        Rng rng(subseed(config.seed, i));
        for (;;) {
            const auto [a, b, c] = nondegenerate_triple(dim, rng, tol);
            if (std::abs(bargmann_invariant(a, b, c, tol).delta.imag()) <= 1e-6) {
                continue;
            }
            const DeformationTrace trace = imdelta_deformation_check(a, b, c, kSteps, tol);
            return trace.constant_sign ? std::size_t{0} : std::size_t{1};
        }
    });
    std::size_t failures = 0;
    for (std::size_t f : flips) {
        failures += f;
    }
    return {"appendix", {counting_check("im_delta_sign_constant", trials, failures)}};
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "gauge",     "triangle",  "isometry",       "solid-angle",
        "geodesic",  "continuum", "reconstruction", "appendix",
    };
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& config) {
    if (name == "gauge") return run_gauge(config);
    if (name == "triangle") return run_triangle(config);
    if (name == "isometry") return run_isometry(config);
    if (name == "solid-angle") return run_solid_angle(config);
    if (name == "geodesic") return run_geodesic(config);
    if (name == "continuum") return run_continuum(config);
    if (name == "reconstruction") return run_reconstruction(config);
    if (name == "appendix") return run_appendix(config);
    throw DomainError("unknown suite \"" + name + "\"");
}

}  // namespace raywig::suites
