// Command-line driver: construct family representations, run verification
// suites, and check the worked examples.  All output is JSON on stdout and is
// byte-identical across runs for the same arguments.
//
//   pencil build    --family A --k 3 [--lambda 5/2] [--t sym]
//   pencil verify   --family D_even --k 2 --suite pencil --mode symbolic
//   pencil examples example1 [--dim 2] [--seed 0]
//
// Exit codes: 0 = all checks pass, 1 = a verification failed, 2 = usage or
// configuration error (unknown family, degenerate parameter value, ...).

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pencil/families.hpp"
#include "pencil/report.hpp"

using namespace pencil;

namespace {

// "sym" keeps the parameter symbolic; anything else must parse as a rational.
std::optional<Rational> parse_param(const std::string& s, const std::string& name) {
    if (s == "sym") return std::nullopt;
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw CLI::ValidationError(name, "expected 'sym' or a rational like 7 or -3/2");
    }
}

FamilyId parse_family(const std::string& s) {
    auto id = family_from_name(s);
    if (!id)
        throw CLI::ValidationError("--family",
                                   "unknown family '" + s +
                                       "' (expected A, D_even, D_odd, E6, E7, or E8)");
    return *id;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact constructor and verifier for the ADE family of "
                 "compatible-product representations"};
    app.require_subcommand(1);

    std::string family_s, lambda_s = "sym", t_s = "sym";
    int k = 0;

    auto* build = app.add_subcommand("build", "construct a representation and print it");
    build->add_option("--family", family_s, "A, D_even, D_odd, E6, E7, or E8")->required();
    build->add_option("--k", k, "series index for the A/D families");
    build->add_option("--lambda", lambda_s, "rational value or 'sym'");
    build->add_option("--t", t_s, "rational value or 'sym'");

    std::string suite = "all", mode = "symbolic";
    int points = 5;
    unsigned seed = 0;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--family", family_s, "A, D_even, D_odd, E6, E7, or E8")->required();
    verify->add_option("--k", k, "series index for the A/D families");
    verify->add_option("--suite", suite,
                       "relations, pencil, r_identity, inverse, ybe_assoc, ybe_lie, "
                       "quiver, dynkin, or all");
    verify->add_option("--mode", mode, "symbolic or sampled")
        ->check(CLI::IsMember({"symbolic", "sampled"}));
    verify->add_option("--points", points, "sample count in sampled mode")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "sampling seed");

    std::string example;
    int p = 2, dim = 2;
    unsigned ex_seed = 0;
    auto* examples = app.add_subcommand("examples", "check a worked example");
    examples->add_option("name", example, "example1, example2, or sect2_example")
        ->required()
        ->check(CLI::IsMember({"example1", "example2", "sect2_example"}));
    examples->add_option("--p", p, "number of components for example2")
        ->check(CLI::Range(1, 3));
    examples->add_option("--dim", dim, "matrix size for example1")->check(CLI::Range(1, 3));
    examples->add_option("--seed", ex_seed, "seed for the random constant matrices");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (build->parsed()) {
            FamilyRep rep = build_family(parse_family(family_s), k);
            auto lv = parse_param(lambda_s, "--lambda");
            auto tv = parse_param(t_s, "--t");
            if (lv || tv) rep = specialize(rep, lv, tv);
            std::cout << rep_to_json(rep).dump(2) << "\n";
            return 0;
        }
        if (verify->parsed()) {
            FamilyRep rep = build_family(parse_family(family_s), k);
            SuiteOptions opt;
            opt.mode = mode;
            opt.points = points;
            opt.seed = seed;
            Json report = run_suite(rep, suite, opt);
            std::cout << report.dump(2) << "\n";
            return report["ok"].get<bool>() ? 0 : 1;
        }
        if (examples->parsed()) {
            Json report = run_example(example, p, dim, ex_seed);
            std::cout << report.dump(2) << "\n";
            return report["ok"].get<bool>() ? 0 : 1;
        }
    } catch (const DegenerateParameter& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
