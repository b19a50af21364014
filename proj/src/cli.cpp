#include "raywig/cli.hpp"

#include <cstdlib>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "raywig/io.hpp"
#include "raywig/random.hpp"
#include "raywig/suites.hpp"

namespace raywig::cli {

namespace {

int exit_code_for(const Error& e) {
    if (dynamic_cast<const NotIsometryError*>(&e) ||
        dynamic_cast<const SearchExhaustedError*>(&e)) {
        return 4;
    }
    if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const DimensionError*>(&e) ||
        dynamic_cast<const DomainError*>(&e) || dynamic_cast<const ZeroVectorError*>(&e)) {
        return 2;
    }
    return 3;  // degenerate geometry, orthogonality, boundary cases
}

Tolerances tolerances_from_env() {
    Tolerances tol;
    if (const char* env = std::getenv("RAYWIG_TOL")) {
        try {
            tol.eq_tol = std::stod(env);
        } catch (const std::exception&) {
            throw ParseError("RAYWIG_TOL is not a number");
        }
        tol.validate();
    }
    return tol;
}

Json suite_report_json(const suites::SuiteReport& report) {
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        checks.push_back(Json{{"property", c.name},
                              {"count", c.count},
                              {"max_residual", c.max_residual},
                              {"threshold", c.threshold},
                              {"pass", c.pass}});
    }
    return Json{{"suite", report.suite}, {"checks", std::move(checks)}, {"pass", report.pass()}};
}

void print_suite_csv(std::ostream& out, const suites::SuiteReport& report, bool header) {
    if (header) {
        out << "suite,property,count,max_residual,threshold,pass\n";
    }
    for (const auto& c : report.checks) {
        out << report.suite << ',' << c.name << ',' << c.count << ','
            << Json(c.max_residual).dump() << ',' << Json(c.threshold).dump() << ','
            << (c.pass ? "true" : "false") << '\n';
    }
}

struct VerifyArgs {
    std::string suite;
    std::uint64_t seed = 0;
    std::optional<std::int64_t> dim;
    std::optional<std::int64_t> trials;
    std::string format = "json";
    bool parallel = false;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
    suites::SuiteConfig config;
    config.seed = args.seed;
    config.tol = tolerances_from_env();
    config.parallel = args.parallel;
    if (args.dim) {
        if (*args.dim < 2) {
            throw DomainError("--dim must be at least 2");
        }
        config.dim = static_cast<Index>(*args.dim);
    }
    if (args.trials) {
        if (*args.trials < 1) {
            throw DomainError("--trials must be at least 1");
        }
        config.trials = static_cast<std::size_t>(*args.trials);
    }

    std::vector<suites::SuiteReport> reports;
    if (args.suite == "all") {
        for (const auto& name : suites::suite_names()) {
            reports.push_back(suites::run_suite(name, config));
        }
    } else {
        reports.push_back(suites::run_suite(args.suite, config));
    }
    const bool pass = std::all_of(reports.begin(), reports.end(),
                                  [](const auto& r) { return r.pass(); });

    if (args.format == "csv") {
        for (std::size_t i = 0; i < reports.size(); ++i) {
            print_suite_csv(out, reports[i], i == 0);
        }
    } else if (args.suite == "all") {
        Json body = Json::array();
        for (const auto& r : reports) {
            body.push_back(suite_report_json(r));
        }
        out << Json{{"command", "verify"},
                    {"suite", "all"},
                    {"seed", args.seed},
                    {"suites", std::move(body)},
                    {"pass", pass}}
                   .dump(2)
            << '\n';
    } else {
        Json body = suite_report_json(reports.front());
        body["seed"] = args.seed;
        out << body.dump(2) << '\n';
    }
    return pass ? 0 : 1;
}

int cmd_phase(const std::string& file_a, const std::string& file_b, const std::string& file_c,
              std::ostream& out) {
    const Tolerances tol = tolerances_from_env();
    const Ray a = ray_from_json(load_json_file(file_a), tol);
    const Ray b = ray_from_json(load_json_file(file_b), tol);
    const Ray c = ray_from_json(load_json_file(file_c), tol);
    const GeodesicTriangle tri = triangle_geometry(a, b, c, tol);
    const BargmannInvariant inv = bargmann_invariant(a, b, c, tol);
    out << triangle_report_json(tri, inv).dump(2) << '\n';
    return 0;
}

int cmd_poincare(const std::string& file_a, const std::string& file_b,
                 const std::string& file_c, std::ostream& out) {
    const Tolerances tol = tolerances_from_env();
    const Ray a = ray_from_json(load_json_file(file_a), tol);
    const Ray b = ray_from_json(load_json_file(file_b), tol);
    const Ray c = ray_from_json(load_json_file(file_c), tol);
    out << half_solid_angle_json(check_half_solid_angle(a, b, c, tol)).dump(2) << '\n';
    return 0;
}

int cmd_classify(const std::string& oracle_file, std::uint64_t seed, std::ostream& out) {
    const Tolerances tol = tolerances_from_env();
    const RayMapOracle oracle = oracle_from_json(load_json_file(oracle_file));
    if (oracle.dim() < 2) {
        throw DimensionError("classification needs dim >= 2");
    }
    Rng rng(seed);
    const IsometryCheck iso = is_isometry_sampled(oracle, 64, rng, tol);
    if (!iso.isometry) {
        throw NotIsometryError("oracle distorts overlaps by " +
                               std::to_string(iso.max_deviation));
    }
    const ChiKind chi = determine_chi(oracle, rng, tol);
    out << Json{{"chi", chi_name(chi)}, {"isometry_max_deviation", iso.max_deviation}}.dump(2)
        << '\n';
    return 0;
}

int cmd_reconstruct(const std::string& oracle_file, const std::optional<std::string>& ref_file,
                    const std::string& out_file, std::uint64_t seed, std::size_t trials,
                    std::ostream& out) {
    const Tolerances tol = tolerances_from_env();
    const RayMapOracle oracle = oracle_from_json(load_json_file(oracle_file));
    std::optional<StateVector> reference;
    if (ref_file) {
        reference = state_from_json(load_json_file(*ref_file));
    }
    Rng rng(seed);
    const LiftedSymmetry lift = wigner_lift(oracle, rng, reference, tol);
    save_json_file(out_file, lift_to_json(lift));

    const double fidelity = std::abs((lift.matrix().adjoint() * oracle.matrix()).trace()) /
                            static_cast<double>(lift.dim());
    const W1W2Report checks = verify_w1_w2(oracle, lift, trials, rng, tol);
    out << fidelity_report_json(lift.chi(), fidelity, checks).dump(2) << '\n';
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ray-space geometry: Pancharatnam phases, Bargmann invariants and Wigner lifts"};
    app.require_subcommand(1);

    std::string file_a, file_b, file_c;
    auto* phase = app.add_subcommand("phase", "Excess phase and triangle of three states");
    phase->add_option("A", file_a, "state JSON file")->required();
    phase->add_option("B", file_b, "state JSON file")->required();
    phase->add_option("C", file_c, "state JSON file")->required();

    auto* poincare =
        app.add_subcommand("poincare", "Half-solid-angle report for three two-state rays");
    poincare->add_option("A", file_a, "state JSON file")->required();
    poincare->add_option("B", file_b, "state JSON file")->required();
    poincare->add_option("C", file_c, "state JSON file")->required();

    std::string oracle_file;
    std::uint64_t seed = 0;
    auto* classify = app.add_subcommand("classify", "Decide chi (unitary vs antiunitary)");
    classify->add_option("oracle", oracle_file, "oracle JSON file")->required();
    classify->add_option("--seed", seed, "RNG seed");

    std::optional<std::string> ref_file;
    std::string out_file = "lift.json";
    std::int64_t rec_trials = 100;
    auto* reconstruct = app.add_subcommand("reconstruct", "Lift an isometry to Hilbert space");
    reconstruct->add_option("oracle", oracle_file, "oracle JSON file")->required();
    reconstruct->add_option("--reference", ref_file, "reference state JSON file");
    reconstruct->add_option("--out", out_file, "output lift JSON path");
    reconstruct->add_option("--seed", seed, "RNG seed");
    reconstruct->add_option("--trials", rec_trials, "W1/W2 verification trials")
        ->check(CLI::PositiveNumber);

    VerifyArgs vargs;
    std::int64_t vdim = 0;
    std::int64_t vtrials = 0;
    auto* verify = app.add_subcommand("verify", "Run a seeded property suite");
    verify->add_option("suite", vargs.suite, "suite name or \"all\"")->required();
    verify->add_option("--seed", vargs.seed, "RNG seed");
    auto* dim_opt = verify->add_option("--dim", vdim, "Hilbert space dimension");
    auto* trials_opt =
        verify->add_option("--trials", vtrials, "trials per property")->check(CLI::PositiveNumber);
    verify->add_option("--format", vargs.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    verify->add_flag("--parallel", vargs.parallel, "distribute trials across threads");

    std::vector<const char*> argv;
    argv.push_back("raywig");
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (phase->parsed()) {
            return cmd_phase(file_a, file_b, file_c, out);
        }
        if (poincare->parsed()) {
            return cmd_poincare(file_a, file_b, file_c, out);
        }
        if (classify->parsed()) {
            return cmd_classify(oracle_file, seed, out);
        }
        if (reconstruct->parsed()) {
            return cmd_reconstruct(oracle_file, ref_file, out_file, seed,
                                   static_cast<std::size_t>(rec_trials), out);
        }
        if (verify->parsed()) {
            if (dim_opt->count() > 0) {
                vargs.dim = vdim;
            }
            if (trials_opt->count() > 0) {
                vargs.trials = vtrials;
            }
            return cmd_verify(vargs, out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
    return 2;
}

}  // namespace raywig::cli
