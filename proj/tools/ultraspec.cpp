// ultraspec: exact non-Archimedean valuations, ultrametric geometry,
// p-adic expansions, and spectral analysis of diagonal operators with
// finite-rank perturbations. One subcommand per run; reports are
// deterministic JSON on stdout (a short summary goes to stderr).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ultraspec/ultraspec.hpp"

namespace {

using ultraspec::json;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ultraspec::ParseError("cannot open file: " + path, 0);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ultraspec::ParseError(std::string("invalid JSON: ") + e.what(), 0);
    }
}

void emit(const std::string& command, json result, std::vector<std::string> warnings,
          const std::string& summary) {
    std::cout << ultraspec::report_bytes(
        ultraspec::make_report(command, std::move(result), std::move(warnings)));
    if (!summary.empty()) std::cerr << summary << "\n";
}

int run(int argc, char** argv) {
    using namespace ultraspec;

    CLI::App app{"exact arithmetic for non-Archimedean valuations, ultrametric balls, "
                 "p-adic expansions, and spectra of perturbed diagonal operators"};
    app.require_subcommand(1);

    // valuation
    long long val_p = 0;
    std::string val_x;
    auto* val = app.add_subcommand("valuation", "p-adic valuation V_p of a rational");
    val->add_option("--p", val_p, "prime p")->required();
    val->add_option("--x", val_x, "rational, e.g. 50/7")->required();

    // absval
    long long abs_p_arg = 0;
    std::string abs_x;
    auto* absv = app.add_subcommand("absval", "p-adic absolute value |x|_p = p^(-V_p(x))");
    absv->add_option("--p", abs_p_arg, "prime p")->required();
    absv->add_option("--x", abs_x, "rational")->required();

    // expand
    long long exp_p = 0;
    std::string exp_x;
    long long exp_digits = 0;
    auto* expand = app.add_subcommand("expand", "canonical base-p digit expansion of a rational");
    expand->add_option("--p", exp_p, "prime p")->required();
    expand->add_option("--x", exp_x, "rational")->required();
    expand->add_option("--digits", exp_digits, "number of digits to produce")
        ->required()
        ->check(CLI::Range(1LL, 10000LL));

    // balls
    long long ball_p = 0;
    std::string ball_a, ball_b;
    auto* balls = app.add_subcommand(
        "balls", "relation of two ultrametric balls: disjoint, nested, or equal");
    balls->add_option("--p", ball_p, "prime p")->required();
    balls->add_option("--a", ball_a, "ball spec center,radius,kind (kind: open|closed)")->required();
    balls->add_option("--b", ball_b, "ball spec center,radius,kind")->required();

    // funcfield
    std::string ff_place, ff_rf;
    auto* ff = app.add_subcommand(
        "funcfield", "valuation of a rational function at a place of K(x), with ring "
                     "and maximal-ideal membership");
    ff->add_option("--place", ff_place,
                   "monic irreducible polynomial (e.g. \"x-1\" or \"[−1,1]\") or \"inf\"")
        ->required();
    ff->add_option("--rf", ff_rf, "rational function num/den in polynomial text format")->required();

    // vectors
    long long vec_p = 0;
    std::string vec_x, vec_y, vec_omega;
    auto* vecs = app.add_subcommand(
        "vectors", "max norm, bilinear forms, and the Cauchy-Schwarz bound on K^t");
    vecs->add_option("--p", vec_p, "prime p")->required();
    vecs->add_option("--x", vec_x, "vector as a rational list, e.g. \"[1,5,25]\"")->required();
    vecs->add_option("--y", vec_y, "second vector");
    vecs->add_option("--omega", vec_omega, "nonzero weights for the weighted form");

    // spectrum
    std::string spec_profile, spec_lambda;
    long long spec_trunc = -1;
    bool spec_finite_rank = false;
    auto* spec = app.add_subcommand(
        "spectrum", "point/essential spectrum decomposition of a diagonal operator "
                    "from an eigenvalue profile");
    spec->add_option("--profile", spec_profile, "profile JSON file")->required();
    spec->add_option("--lambda", spec_lambda, "classify lambda*I - D for this rational");
    spec->add_option("--truncate", spec_trunc, "realize the first t diagonal entries")
        ->check(CLI::Range(1LL, 100000LL));
    spec->add_flag("--finite-rank", spec_finite_rank,
                   "require a finite-rank diagonal profile and check its spectrum shape");

    // perturb
    std::string pert_lambda, pert_omega, pert_pairs, pert_check;
    long long pert_trunc = -1;
    auto* pert = app.add_subcommand(
        "perturb", "finite-rank perturbation of a diagonal operator at truncation: "
                   "matrix, theta sequence, exact eigenvalue checks");
    pert->add_option("--lambda", pert_lambda, "diagonal prefix as a rational list")->required();
    pert->add_option("--omega", pert_omega, "weights as a rational list")->required();
    pert->add_option("--pairs", pert_pairs, "JSON file with {\"pairs\":[{\"u\":…,\"v\":…}]}")
        ->required();
    pert->add_option("--check-lambda", pert_check, "test this rational as an eigenvalue");
    pert->add_option("--truncate", pert_trunc, "use only the first t coordinates")
        ->check(CLI::Range(1LL, 10000LL));

    // props
    std::uint64_t props_seed = 0;
    std::size_t props_cases = 0;
    auto* props = app.add_subcommand(
        "props", "seeded property suites: valuation axioms, ultrametric geometry, "
                 "expansion arithmetic, K^t forms, spectral and perturbation identities");
    props->add_option("--seed", props_seed, "RNG seed")->required();
    props->add_option("--cases", props_cases, "cases per suite")
        ->required()
        ->check(CLI::Range(std::size_t(1), std::size_t(1000000)));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (val->parsed()) {
        const PAdicContext ctx((Int(val_p)));
        const ValuationValue v = vp_rat(ctx, parse_rational(val_x));
        emit("valuation", json{{"valuation", to_json(v)}}, {}, "valuation: " + v.to_string());
        return 0;
    }

    if (absv->parsed()) {
        const PAdicContext ctx((Int(abs_p_arg)));
        const AbsValue a = abs_p(ctx, parse_rational(abs_x));
        emit("absval", abs_to_json(ctx, a), {}, "absolute value: " + a.to_string(ctx));
        return 0;
    }

    if (expand->parsed()) {
        const PAdicContext ctx((Int(exp_p)));
        const Rational x = parse_rational(exp_x);
        // --digits counts produced digits: precision shift + digits
        long long n = exp_digits;
        if (!x.is_zero()) n += vp_rat(ctx, x).exponent();
        const PAdicApprox a = approx_from_rational(ctx, x, n);
        emit("expand", to_json(a), {},
             "expansion with " + std::to_string(a.digits.size()) + " digits at shift " +
                 std::to_string(a.shift));
        return 0;
    }

    if (balls->parsed()) {
        const PAdicContext ctx((Int(ball_p)));
        const Ball a = parse_ball(ctx, ball_a);
        const Ball b = parse_ball(ctx, ball_b);
        const BallRelation rel = balls_relation(ctx, a, b);
        emit("balls", json{{"relation", to_string(rel)}}, {}, "relation: " + to_string(rel));
        return 0;
    }

    if (ff->parsed()) {
        const RationalFunction rf = parse_rational_function(ff_rf);
        const PlaceSpec place =
            ff_place == "inf" ? PlaceSpec::infinite() : PlaceSpec::finite(parse_poly(ff_place));
        const MembershipReport rep = ring_membership(rf, place);
        emit("funcfield", to_json(rep), {}, "valuation: " + rep.valuation.to_string());
        return 0;
    }

    if (vecs->parsed()) {
        const PAdicContext ctx((Int(vec_p)));
        const Vec x = parse_rational_list(vec_x);
        json result;
        result["norm_x"] = abs_to_json(ctx, norm_max(ctx, x));
        std::string summary = "norm_x: " + norm_max(ctx, x).to_string(ctx);
        if (!vec_y.empty()) {
            const Vec y = parse_rational_list(vec_y);
            if (y.size() != x.size())
                throw ParseError("vectors must have the same length", 0);
            result["norm_y"] = abs_to_json(ctx, norm_max(ctx, y));
            result["inner_t"] = inner_t(x, y).to_string();
            result["cauchy_schwarz_holds"] = cauchy_schwarz_holds(ctx, x, y);
            if (!vec_omega.empty()) {
                const auto wl = parse_rational_list(vec_omega);
                if (wl.size() != x.size())
                    throw ParseError("weights must match the vector length", 0);
                result["inner_omega"] = inner_omega(WeightSeq(wl), x, y).to_string();
            }
            summary += ", inner_t: " + inner_t(x, y).to_string();
        }
        emit("vectors", std::move(result), {}, summary);
        return 0;
    }

    if (spec->parsed()) {
        const SpectralProfile profile = parse_profile_json(read_json_file(spec_profile));
        const SpectrumReport rep =
            spec_finite_rank ? finite_rank_diag_report(profile) : spectrum_report(profile);
        json result = to_json(rep);
        if (!spec_lambda.empty()) {
            const Rational lam = parse_rational(spec_lambda);
            json q = to_json(fredholm_status(profile, lam));
            q["lambda"] = lam.to_string();
            result["query"] = std::move(q);
        }
        if (spec_trunc > 0) {
            const auto prefix = realize_prefix(profile, static_cast<std::size_t>(spec_trunc));
            result["prefix"] = to_json(prefix);
            if (!spec_lambda.empty())
                result["duality"] = to_json(range_equals_kernel_perp(
                    profile, parse_rational(spec_lambda), static_cast<std::size_t>(spec_trunc)));
        }
        emit("spectrum", std::move(result), rep.warnings,
             "sigma_e has " + std::to_string(rep.sigma_e.size()) + " point(s)");
        return 0;
    }

    if (pert->parsed()) {
        std::vector<Rational> lambda = parse_rational_list(pert_lambda);
        std::vector<Rational> omega = parse_rational_list(pert_omega);
        auto pairs = parse_pairs_json(read_json_file(pert_pairs));
        if (pert_trunc > 0) {
            const auto t = static_cast<std::size_t>(pert_trunc);
            if (t > lambda.size() || t > omega.size())
                throw ParseError("truncation exceeds provided coordinates", 0);
            for (const auto& [u, v] : pairs)
                if (t > u.size() || t > v.size())
                    throw ParseError("truncation exceeds provided coordinates", 0);
            lambda.resize(t);
            omega.resize(t);
            for (auto& [u, v] : pairs) {
                u.resize(t);
                v.resize(t);
            }
        }
        if (lambda.size() != omega.size())
            throw ParseError("lambda and omega must have the same length", 0);
        for (const auto& [u, v] : pairs)
            if (u.size() != omega.size() || v.size() != omega.size())
                throw ParseError("pair vectors must match the weight length", 0);
        const FiniteRankPerturbation fr(WeightSeq(omega), pairs);
        const TruncatedOperator op = assemble(lambda, fr);

        json result;
        std::vector<std::string> warnings;
        result["matrix"] = to_json(op.entries);
        result["theta"] = to_json(theta_sequence(lambda, fr));
        if (lambda.size() <= 12)
            result["comparison"] = to_json(spectrum_compare(lambda, fr));
        else
            warnings.push_back("comparison skipped: oracle limited to small truncations");
        if (!pert_check.empty())
            result["check"] = to_json(is_eigenvalue(op, parse_rational(pert_check)));
        emit("perturb", std::move(result), std::move(warnings),
             "assembled " + std::to_string(lambda.size()) + "x" + std::to_string(lambda.size()) +
                 " operator");
        return 0;
    }

    // props
    const auto results = run_props(props_seed, props_cases);
    json suites = json::array();
    bool all_passed = true;
    std::size_t failed = 0;
    for (const PropResult& pr : results) {
        json s;
        s["name"] = pr.name;
        s["cases"] = pr.cases;
        s["failures"] = pr.failures;
        s["passed"] = pr.passed();
        suites.push_back(std::move(s));
        if (!pr.passed()) {
            all_passed = false;
            ++failed;
        }
    }
    json result;
    result["seed"] = props_seed;
    result["cases"] = props_cases;
    result["suites"] = std::move(suites);
    result["all_passed"] = all_passed;
    emit("props", std::move(result), {},
         all_passed ? "all " + std::to_string(results.size()) + " suites passed"
                    : std::to_string(failed) + " suite(s) failed");
    return all_passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ultraspec::ParseError& e) {
        std::cout << json{{"error", e.what()}}.dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cout << json{{"error", e.what()}}.dump(2) << "\n";
        return 1;
    }
}
