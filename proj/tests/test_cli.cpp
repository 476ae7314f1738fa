#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(HERMIX_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return CliResult{WEXITSTATUS(status), out};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string golden(const std::string& name) {
    return std::string(HERMIX_GOLDEN_DIR) + "/" + name;
}

struct TempPath {
    std::string path;
    explicit TempPath(const std::string& name) : path("cli_" + name) {}
    ~TempPath() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("roots subcommand solves hand-checked systems") {
    auto r = run_cli("roots --poly \"x^2 - 3*x + 2\"");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    REQUIRE(j["real_solutions"].size() == 2);
    CHECK(j["real_solutions"][0]["x"].get<double>() == doctest::Approx(1.0));
    CHECK(j["real_solutions"][1]["x"].get<double>() == doctest::Approx(2.0));
    CHECK(j["quotient_dimension"] == 2);

    r = run_cli("roots --poly \"x - y\" --poly \"x^2 + y^2 - 1\"");
    CHECK(r.exit_code == 0);
    j = json::parse(r.out);
    REQUIRE(j["real_solutions"].size() == 2);
    double h = std::sqrt(0.5);
    CHECK(j["real_solutions"][0]["x"].get<double>() == doctest::Approx(-h));
    CHECK(j["real_solutions"][1]["y"].get<double>() == doctest::Approx(h));

    r = run_cli("roots --poly \"x^2 + 1\"");
    CHECK(r.exit_code == 0);
    j = json::parse(r.out);
    CHECK(j["solutions"].size() == 2);
    CHECK(j["real_solutions"].empty());
}

TEST_CASE("roots reports positive-dimensional ideals as solver failures") {
    auto r = run_cli("roots --poly \"x*y\"");
    CHECK(r.exit_code == 2);
    json j = json::parse(r.out);
    CHECK(j.contains("error"));
}

TEST_CASE("usage errors exit with code 1") {
    CHECK(run_cli("fit").exit_code == 1);
    CHECK(run_cli("nonsense").exit_code == 1);
    CHECK(run_cli("roots --poly \"x +\"").exit_code == 1);
    CHECK(run_cli("fit --input no_such_file.csv --families \"exponential:theta=1\"")
              .exit_code == 1);
    CHECK(run_cli("gen --families \"cauchy:x0=1\" --weights 1 --n 5 --seed 0 "
                  "--output /dev/null")
              .exit_code == 1);
}

TEST_CASE("gen is deterministic and respects the support") {
    TempPath a("gen_a.csv"), b("gen_b.csv");
    auto r = run_cli("gen --families \"uniform:a=0,b=1\" --weights 1 --n 5 "
                     "--seed 0 --output " + a.path);
    CHECK(r.exit_code == 0);
    r = run_cli("gen --families \"uniform:a=0,b=1\" --weights 1 --n 5 "
                "--seed 0 --output " + b.path);
    CHECK(r.exit_code == 0);
    CHECK(slurp(a.path) == slurp(b.path));

    std::ifstream in(a.path);
    double x;
    int count = 0;
    while (in >> x) {
        CHECK(x >= 0.0);
        CHECK(x <= 1.0);
        ++count;
    }
    CHECK(count == 5);
}

TEST_CASE("gen weight partition matches the requested fractions") {
    TempPath out("gen_frac.csv");
    auto r = run_cli(
        "gen --families \"gaussian:mu=-40,sigma2=1;gaussian:mu=40,sigma2=1\" "
        "--weights 0.3,0.7 --n 100000 --seed 0 --output " + out.path);
    CHECK(r.exit_code == 0);
    std::ifstream in(out.path);
    double x;
    std::size_t low = 0, total = 0;
    while (in >> x) {
        ++total;
        if (x < 0) ++low;
    }
    CHECK(total == 100000);
    CHECK(std::fabs(static_cast<double>(low) / 100000 - 0.3) < 0.005);
}

TEST_CASE("gen rejects infeasible weights") {
    auto r = run_cli("gen --families \"uniform:a=0,b=1;exponential:theta=1\" "
                     "--weights 0.5,0.6 --n 10 --seed 0 --output /dev/null");
    CHECK(r.exit_code == 1);
    CHECK(json::parse(r.out).contains("error"));
}

TEST_CASE("gen then fit round trip recovers weights") {
    TempPath data("roundtrip.csv");
    auto r = run_cli(
        "gen --families \"gaussian:mu=0,sigma2=1;exponential:theta=1\" "
        "--weights 0.3,0.7 --n 50000 --seed 0 --output " + data.path);
    REQUIRE(r.exit_code == 0);
    r = run_cli("fit --input " + data.path +
                " --families \"gaussian:mu=0,sigma2=1;exponential:theta=1\" "
                "--moments 2 --seed 0");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(std::fabs(j["weights"][0].get<double>() - 0.3) < 0.02);
    CHECK(std::fabs(j["weights"][1].get<double>() - 0.7) < 0.02);
    CHECK(j["diagnostics"]["solver_path"] == "linear");
}

TEST_CASE("fit reports no feasible candidate with exit 2") {
    TempPath data("infeasible.csv");
    auto r = run_cli("gen --families \"gaussian:mu=0,sigma2=1\" --weights 1 "
                     "--n 2000 --seed 1 --output " + data.path);
    REQUIRE(r.exit_code == 0);
    // Components far from the data force a negative-weight solution.
    r = run_cli("fit --input " + data.path +
                " --families \"gaussian:mu=4,sigma2=1;gaussian:mu=5,sigma2=1\" "
                "--moments 2 --seed 0");
    CHECK(r.exit_code == 2);
    json j = json::parse(r.out);
    CHECK(j["error"] == "no simplex-feasible candidate");
    for (const auto& c : j["candidates"])
        CHECK(!c["simplex_feasible"].get<bool>());
}

TEST_CASE("fit single component gives weight one") {
    TempPath data("single.csv");
    auto r = run_cli("gen --families \"exponential:theta=1\" --weights 1 "
                     "--n 1000 --seed 3 --output " + data.path);
    REQUIRE(r.exit_code == 0);
    r = run_cli("fit --input " + data.path +
                " --families \"exponential:theta=1\" --moments 1 --seed 0");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["weights"].size() == 1);
    CHECK(j["weights"][0].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("emit-cdf writes the overlay table") {
    TempPath data("cdfdata.csv"), cdf("overlay.csv");
    auto r = run_cli("gen --families \"uniform:a=0,b=1\" --weights 1 --n 100 "
                     "--seed 0 --output " + data.path);
    REQUIRE(r.exit_code == 0);
    r = run_cli("fit --input " + data.path +
                " --families \"uniform:a=0,b=1\" --moments 1 --seed 0 "
                "--emit-cdf " + cdf.path);
    REQUIRE(r.exit_code == 0);
    std::string text = slurp(cdf.path);
    CHECK(text.rfind("x,empirical_cdf,fitted_cdf\n", 0) == 0);
    // one header plus one row per sample point
    CHECK(std::count(text.begin(), text.end(), '\n') == 101);
}

TEST_CASE("golden files match byte for byte") {
    TempPath data("golden_data.csv");
    auto r = run_cli(
        "gen --families \"gaussian:mu=0,sigma2=1;exponential:theta=1\" "
        "--weights 0.3,0.7 --n 5000 --seed 0 --output " + data.path);
    REQUIRE(r.exit_code == 0);
    CHECK(slurp(data.path).substr(0, 256) ==
          slurp(golden("gen_head.txt")).substr(0, 256));

    r = run_cli("fit --input " + data.path +
                " --families \"gaussian:mu=0,sigma2=1;exponential:theta=1\" "
                "--moments 2 --seed 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out == slurp(golden("fit_report.json")));

    r = run_cli("eda --input " + data.path +
                " --pool \"gaussian:mu=0,sigma2=1;exponential:theta=1;"
                "uniform:a=0,b=1\" --subset-size 2 --moments 2 --seed 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out == slurp(golden("eda_report.json")));

    r = run_cli("roots --poly \"x - y\" --poly \"x^2 + y^2 - 1\" --seed 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out == slurp(golden("roots_report.json")));
}
