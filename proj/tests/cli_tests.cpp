#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

using nlohmann::json;

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::filesystem::path work_dir() {
    static const std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() / "ultraspec_cli_tests";
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args) {
    const auto out_path = work_dir() / "stdout.txt";
    const auto err_path = work_dir() / "stderr.txt";
    const std::string cmd = std::string(ULTRASPEC_CLI_PATH) + " " + args + " >" +
                            out_path.string() + " 2>" + err_path.string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    return r;
}

std::filesystem::path write_file(const std::string& name, const std::string& body) {
    const auto p = work_dir() / name;
    std::ofstream(p, std::ios::binary) << body;
    return p;
}

json result_of(const RunResult& r) {
    REQUIRE(r.exit_code == 0);
    const json rep = json::parse(r.out);
    REQUIRE(rep["schema_version"] == "1.0.0");
    REQUIRE(rep.contains("command"));
    REQUIRE(rep.contains("result"));
    REQUIRE(rep.contains("warnings"));
    return rep;
}

}  // namespace

TEST_CASE("valuation subcommand", "[cli]") {
    auto rep = result_of(run_cli("valuation --p 5 --x 50"));
    CHECK(rep["command"] == "valuation");
    CHECK(rep["result"]["valuation"] == 2);
    CHECK(result_of(run_cli("valuation --p 5 --x 50/7"))["result"]["valuation"] == 2);
    CHECK(result_of(run_cli("valuation --p 7 --x 50/7"))["result"]["valuation"] == -1);
    CHECK(result_of(run_cli("valuation --p 3 --x 0"))["result"]["valuation"] == "inf");
}

TEST_CASE("absval subcommand", "[cli]") {
    const auto rep = result_of(run_cli("absval --p 3 --x 18"));
    CHECK(rep["result"]["exponent"] == -2);
    CHECK(rep["result"]["value"] == "1/9");
    CHECK(rep["result"]["zero"] == false);
    CHECK(result_of(run_cli("absval --p 3 --x 0"))["result"]["zero"] == true);
}

TEST_CASE("expand subcommand", "[cli]") {
    const auto rep = result_of(run_cli("expand --p 5 --x -1/4 --digits 8"));
    CHECK(rep["result"]["shift"] == 0);
    CHECK(rep["result"]["digits"] == json::array({1, 1, 1, 1, 1, 1, 1, 1}));

    const auto shifted = result_of(run_cli("expand --p 5 --x 50/7 --digits 6"));
    CHECK(shifted["result"]["shift"] == 2);
    CHECK(shifted["result"]["digits"] == json::array({1, 2, 1, 4, 2, 3}));

    const auto zero = result_of(run_cli("expand --p 5 --x 0 --digits 4"));
    CHECK(zero["result"]["shift"] == 0);
    CHECK(zero["result"]["digits"] == json::array({0, 0, 0, 0}));
}

TEST_CASE("balls subcommand", "[cli]") {
    CHECK(result_of(run_cli("balls --p 5 --a \"0,1/5,closed\" --b \"3,1,closed\""))["result"]
              ["relation"] == "LeftInsideRight");
    CHECK(result_of(run_cli("balls --p 3 --a \"0,1/9,closed\" --b \"1/3,1/3,closed\""))["result"]
              ["relation"] == "Disjoint");
    CHECK(result_of(run_cli("balls --p 5 --a \"0,1,open\" --b \"0,1/5,closed\""))["result"]
              ["relation"] == "Equal");
    // radius outside the value group is a usage error
    CHECK(run_cli("balls --p 5 --a \"0,1/3,closed\" --b \"0,1,closed\"").exit_code == 2);
}

TEST_CASE("funcfield subcommand", "[cli]") {
    const auto rep = result_of(run_cli("funcfield --place \"x-1\" --rf \"[−1,1]/[2,1]\""));
    CHECK(rep["result"]["valuation"] == 1);
    CHECK(rep["result"]["in_ring"] == true);
    CHECK(rep["result"]["in_maximal_ideal"] == true);

    const auto inf = result_of(run_cli("funcfield --place inf --rf \"(x^2-1)/(x+2)\""));
    CHECK(inf["result"]["valuation"] == -1);
    CHECK(inf["result"]["in_ring"] == false);

    CHECK(run_cli("funcfield --place \"2*x+2\" --rf \"x\"").exit_code == 1);  // not monic
}

TEST_CASE("vectors subcommand", "[cli]") {
    const auto rep = result_of(
        run_cli("vectors --p 3 --x \"[1,3,9]\" --y \"[1,1,1]\" --omega \"[1,3,1]\""));
    CHECK(rep["result"]["norm_x"]["value"] == "1");
    CHECK(rep["result"]["inner_t"] == "13");
    CHECK(rep["result"]["inner_omega"] == "19");
    CHECK(rep["result"]["cauchy_schwarz_holds"] == true);

    // mismatched lengths are a usage error
    CHECK(run_cli("vectors --p 3 --x \"[1,2]\" --y \"[1]\"").exit_code == 2);
}

TEST_CASE("spectrum subcommand", "[cli]") {
    const auto prof = write_file("explicit.json",
                                 R"({"kind":"explicit","entries":[
                                     {"value":"0","mult":"inf"},
                                     {"value":"1","mult":2},
                                     {"value":"1/3","mult":1}]})");
    const auto rep = result_of(run_cli("spectrum --profile " + prof.string() + " --lambda 1"));
    CHECK(rep["result"]["sigma_e"] == json::array({"0"}));
    CHECK(rep["result"]["sigma_e_double_prime"] == json::array({"0"}));
    CHECK(rep["result"]["sigma_e_prime"] == json::array());
    CHECK(rep["result"]["query"]["class"] == "eigenvalue-index-zero");
    CHECK(rep["result"]["query"]["eta"] == 2);
    CHECK(rep["result"]["query"]["delta"] == 2);

    const auto geo = write_file("geo.json",
                                R"({"kind":"geometric","p":5,"c":"1","alpha":"5","count_hint":20})");
    const auto grep_ = result_of(run_cli("spectrum --profile " + geo.string()));
    CHECK(grep_["result"]["sigma_e"] == json::array({"0"}));
    CHECK(grep_["result"]["sigma_e_prime"] == json::array({"0"}));
    CHECK(grep_["result"]["point_spectrum"]["finite"] == false);

    // truncation realizes the prefix and checks the range/kernel split
    const auto tr = result_of(run_cli("spectrum --profile " + geo.string() +
                                      " --lambda 5 --truncate 4"));
    CHECK(tr["result"]["prefix"] == json::array({"1", "5", "25", "125"}));
    CHECK(tr["result"]["duality"]["ok"] == true);
    CHECK(tr["result"]["duality"]["kernel_indices"] == json::array({1}));

    // finite-rank check: accepted shape
    const auto fr = write_file("finite_rank.json",
                               R"({"kind":"explicit","entries":[
                                   {"value":"0","mult":"inf"},
                                   {"value":"2","mult":3}]})");
    const auto frep = result_of(run_cli("spectrum --profile " + fr.string() + " --finite-rank"));
    CHECK(frep["result"]["sigma_e"] == json::array({"0"}));

    // finite-rank check: a nonzero infinite multiplicity is a domain error
    const auto badfr = write_file("not_finite_rank.json",
                                  R"({"kind":"explicit","entries":[
                                      {"value":"0","mult":"inf"},
                                      {"value":"7","mult":"inf"}]})");
    const auto notfr = run_cli("spectrum --profile " + badfr.string() + " --finite-rank");
    CHECK(notfr.exit_code == 1);
    CHECK(json::parse(notfr.out)["error"] == "not a finite-rank diagonal profile");

    // declared accumulation that nothing approaches surfaces a warning
    const auto noisy = write_file("noisy.json",
                                  R"({"kind":"union","parts":[
                                      {"kind":"geometric","p":5,"c":"1","alpha":"5"}],
                                      "accumulation":["3"]})");
    const auto nrep = result_of(run_cli("spectrum --profile " + noisy.string()));
    REQUIRE(nrep["warnings"].size() == 1);
    CHECK(nrep["warnings"][0] ==
          "declared accumulation point 3 not approached within sampled prefix");

    CHECK(run_cli("spectrum --profile " + work_dir().string() + "/missing.json").exit_code == 2);
}

TEST_CASE("perturb subcommand", "[cli]") {
    const auto pairs = write_file("pairs.json",
                                  R"({"pairs":[{"u":{"coords":["1","1","0"]},
                                                "v":{"coords":["0","1","1"]}}]})");
    const std::string argv = "perturb --lambda \"[1,2,3]\" --omega \"[1,1,1]\" --pairs " +
                             pairs.string() + " --check-lambda 3";
    const auto rep = result_of(run_cli(argv));
    CHECK(rep["result"]["matrix"] == json::array({json::array({"1", "1", "1"}),
                                                  json::array({"0", "3", "1"}),
                                                  json::array({"0", "0", "3"})}));
    CHECK(rep["result"]["theta"] == json::array({"1", "3", "3"}));
    CHECK(rep["result"]["check"]["is_eigenvalue"] == true);
    CHECK(rep["result"]["check"]["kernel_dim"] == 1);
    CHECK(rep["result"]["comparison"]["sigma_p"] == json::array({"1", "3"}));
    CHECK(rep["result"]["comparison"]["relation"] == "equal as sets");
    CHECK(rep["result"]["comparison"]["char_poly"]["coeffs"] ==
          json::array({"-9", "15", "-7", "1"}));

    // byte-identical on a second run
    const auto again = run_cli(argv);
    CHECK(again.exit_code == 0);
    CHECK(again.out == run_cli(argv).out);

    // truncation must not exceed any input length
    CHECK(run_cli("perturb --lambda \"[1,2,3]\" --omega \"[1,1,1]\" --pairs " + pairs.string() +
                  " --truncate 4").exit_code == 2);
    const auto trunc = result_of(run_cli("perturb --lambda \"[1,2,3]\" --omega \"[1,1,1]\" --pairs " +
                                         pairs.string() + " --truncate 2"));
    CHECK(trunc["result"]["theta"] == json::array({"1", "3"}));

    // zero weights are rejected
    CHECK(run_cli("perturb --lambda \"[1,2]\" --omega \"[1,0]\" --pairs " + pairs.string())
              .exit_code != 0);
}

TEST_CASE("props subcommand", "[cli]") {
    const auto rep = result_of(run_cli("props --seed 42 --cases 5"));
    CHECK(rep["result"]["all_passed"] == true);
    REQUIRE(rep["result"]["suites"].size() >= 25);
    for (const auto& s : rep["result"]["suites"]) {
        CHECK(s["failures"] == 0);
        // exhaustive sweeps report their grid size; randomized suites honor --cases
        const std::string name = s["name"];
        if (name == "geometric-series-identity" || name == "essential-spectrum-decomposition")
            CHECK(s["cases"].get<int>() > 5);
        else
            CHECK(s["cases"] == 5);
    }

    // deterministic bytes for a fixed seed
    CHECK(run_cli("props --seed 42 --cases 5").out == run_cli("props --seed 42 --cases 5").out);
}

TEST_CASE("exit codes and error payloads", "[cli]") {
    // usage: missing required flag, unknown subcommand, malformed rational
    CHECK(run_cli("valuation --p 5").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    const auto bad = run_cli("valuation --p 5 --x abc");
    CHECK(bad.exit_code == 2);
    CHECK(json::parse(bad.out).contains("error"));

    // domain: composite p
    const auto comp = run_cli("valuation --p 4 --x 5");
    CHECK(comp.exit_code == 1);
    CHECK(json::parse(comp.out)["error"] == "p must be prime: 4");

    // help exits 0
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("valuation --help").exit_code == 0);
}

TEST_CASE("reports are byte-deterministic", "[cli]") {
    for (const std::string argv : {std::string("valuation --p 5 --x 50/7"),
                                   std::string("expand --p 5 --x -1/4 --digits 8"),
                                   std::string("vectors --p 3 --x \"[1,3,9]\" --y \"[1,1,1]\"")}) {
        const auto a = run_cli(argv);
        const auto b = run_cli(argv);
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
        CHECK(json::parse(a.out).dump(2) + "\n" == a.out);  // canonical form
    }
}
