#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using cesolve::cli::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "cesolve");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cesolve::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

} // namespace

TEST_CASE("spectrum") {
    const Result r = run({"spectrum", "--A", "10.25", "--B", "12.5", "--output", "json"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    REQUIRE(j["levels"].size() == 1);
    const auto& l = j["levels"][0];
    CHECK(l["roots"][0]["re"].get<double>() == doctest::Approx(-1.836).epsilon(1e-3));
    CHECK(l["roots"][1]["re"].get<double>() == doctest::Approx(2.288).epsilon(1e-3));
    CHECK(l["roots"][2]["re"].get<double>() == doctest::Approx(9.298).epsilon(1e-3));
    CHECK(l["E"].get<double>() == doctest::Approx(-3.197).epsilon(1e-3));
    CHECK(l["window"][1].get<double>() == 2.5);
    CHECK_FALSE(j.contains("stamp"));
    CHECK(run({"spectrum", "--output", "json", "--stamp"}).out.find("\"stamp\"") != std::string::npos);

    const Result table = run({"spectrum"});
    CHECK(table.code == 0);
    CHECK(table.out.find("2.2879774437") != std::string::npos);

    const Result csv = run({"spectrum", "--A", "30", "--B", "32", "--output", "csv"});
    CHECK(csv.code == 0);
    CHECK(count_lines(csv.out) == 3);
}

TEST_CASE("spectrum exit codes") {
    CHECK(run({"spectrum", "--A", "10.25", "--B", "0.4"}).code == 2);
    const Result none = run({"spectrum", "--A", "1", "--B", "12.5", "--output", "json"});
    CHECK(none.code == 0);
    CHECK(json::parse(none.out)["levels"].empty());
    CHECK(run({"spectrum", "--bogus"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("wavefunction csv") {
    const Result r = run({"wavefunction", "--n", "0"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("x,psi_0\n", 0) == 0);
    CHECK(r.out.find('\r') == std::string::npos);
    CHECK(count_lines(r.out) == 16002);
    // 17 significant digits
    std::istringstream is(r.out);
    std::string line;
    std::getline(is, line);
    std::getline(is, line);
    CHECK(line == "-20,1.680141607538273e-15");
    // byte-identical reruns
    CHECK(run({"wavefunction", "--n", "0"}).out == r.out);
    CHECK(run({"wavefunction", "--n", "1"}).code == 3);
    CHECK(run({"wavefunction", "--n", "1", "--A", "30", "--B", "32"}).code == 0);
    CHECK(run({"wavefunction", "--n", "0", "--B", "0.2"}).code == 2);
}

TEST_CASE("verify") {
    const Result ok = run({"verify", "--output", "json"});
    CHECK(ok.code == 0);
    const json j = json::parse(ok.out);
    CHECK(j["passed"].get<bool>());
    CHECK(j["oracle_count"].get<int>() == 1);
    for (const auto& c : j["checks"])
        CHECK(c["passed"].get<bool>());

    for (const char* sel : {"leftmost", "rightmost"}) {
        const Result bad = run({"verify", "--select", sel, "--output", "json"});
        CHECK(bad.code == 1);
        const json b = json::parse(bad.out);
        CHECK_FALSE(b["passed"].get<bool>());
        bool named = false;
        for (const auto& c : b["checks"])
            named = named || (!c["passed"].get<bool>() && c["name"].get<std::string>().rfind("level[0]", 0) == 0);
        CHECK(named);
    }
    const Result zero = run({"verify", "--tol", "0"});
    CHECK(zero.code == 1);
    CHECK(zero.out.find("FAIL") != std::string::npos);
    CHECK(run({"verify", "--A", "30", "--B", "32"}).code == 0);
    CHECK(run({"verify", "--scheme", "central3", "--output", "json"}).code == 0);
    // identical output on rerun
    CHECK(run({"verify", "--output", "json"}).out == ok.out);
}

TEST_CASE("natanzon") {
    const Result r = run({"natanzon", "--output", "json"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    REQUIRE(j["levels"].size() == 3);
    CHECK(j["levels"][0]["E"].get<double>() == doctest::Approx(-5.25));
    CHECK(j["levels"][0]["delta_E"].get<double>() < 1e-4);
    CHECK(j["z_ode_residual"].get<double>() < 1e-10);
    CHECK(json::parse(run({"natanzon", "--n-max", "1", "--output", "json"}).out)["levels"].size() == 2);
    CHECK(run({"natanzon", "--c0", "-1"}).code == 2);
    CHECK(run({"natanzon", "--a", "5"}).code == 2);
}

TEST_CASE("output files and the output directory variable") {
    const auto dir = std::filesystem::temp_directory_path() / "cesolve_cli_test";
    std::filesystem::create_directories(dir);
    ::setenv("CESOLVE_OUTPUT_DIR", dir.string().c_str(), 1);
    CHECK(run({"spectrum", "--output", "json", "--out", "spec.json"}).code == 0);
    CHECK(run({"natanzon", "--csv-out", "nat.csv", "--out", "nat.txt"}).code == 0);
    ::unsetenv("CESOLVE_OUTPUT_DIR");
    std::ifstream in(dir / "spec.json");
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(json::parse(ss.str())["command"] == "spectrum");
    std::ifstream csv(dir / "nat.csv");
    std::string header;
    std::getline(csv, header);
    CHECK(header == "x,z,V,psi_0,psi_1,psi_2");
    std::filesystem::remove_all(dir);
}

TEST_CASE("help lists defaults") {
    const Result h = run({"verify", "--help"});
    CHECK(h.code == 0);
    for (const char* s : {"[10.25]", "[12.5]", "[-20]", "[60]", "[0.005]", "[numerov]", "[table]"})
        CHECK(h.out.find(s) != std::string::npos);
    const Result n = run({"natanzon", "--help"});
    for (const char* s : {"[-40]", "[40]", "[0.01]", "[35]"})
        CHECK(n.out.find(s) != std::string::npos);
}
