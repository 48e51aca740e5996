#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <json.hpp>

#include "okishio/cli.hpp"

namespace fs = std::filesystem;
using okishio::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

/// Scratch directory with the example economy, change and a wage file.
struct Fixtures {
    fs::path dir;
    fs::path economy;
    fs::path tc;
    fs::path wage;
    fs::path bad_economy;

    Fixtures() {
        dir = fs::temp_directory_path() / "okishio-cli-test";
        fs::create_directories(dir);
        economy = dir / "economy.json";
        tc = dir / "tc.json";
        wage = dir / "wage.json";
        bad_economy = dir / "identity.json";
        std::ofstream(economy) << R"({"A": [[0.35, 0.05, 0.25], [0.15, 0.45, 0.05], [0.15, 0.15, 0.35]],
            "L": [0.2, 0.15, 0.25], "b": [0.3333333333333333, 0.3333333333333333, 0.3333333333333333]})";
        std::ofstream(tc) << R"({"sector": 3, "column": [0.27, 0.07, 0.37], "labor": 0.18})";
        std::ofstream(wage) << R"({"b": [0.3333333333333333, 0.3333333333333333, 0.3333333333333333]})";
        std::ofstream(bad_economy) << R"({"A": [[1, 0], [0, 1]], "L": [1, 1], "b": [0.1, 0.1]})";
    }
};

const Fixtures& fixtures() {
    static const Fixtures f;
    return f;
}

}  // namespace

TEST_CASE("analyze prints the equilibrium") {
    const Result r = invoke({"analyze", "--economy", fixtures().economy.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("0.1764706") != std::string::npos);
    CHECK(r.out.find("0.5384615") != std::string::npos);
}

TEST_CASE("analyze emits json") {
    const Result r = invoke({"analyze", "--economy", fixtures().economy.string(), "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"assumption_B\"") != std::string::npos);
}

TEST_CASE("input errors exit with 2") {
    CHECK(invoke({"analyze", "--economy", fixtures().bad_economy.string()}).code == 2);
    CHECK(invoke({"analyze", "--economy", (fixtures().dir / "missing.json").string()}).code == 2);
    CHECK(invoke({"analyze"}).code == 2);
    CHECK(invoke({"no-such-command"}).code == 2);
    CHECK(invoke({"synth-tc", "--economy", fixtures().economy.string(), "--sector", "4"}).code == 2);
    CHECK(invoke({"synth-tc", "--economy", fixtures().economy.string(), "--sector", "1", "--labor-frac", "1"}).code ==
          2);
    const Result r = invoke({"analyze", "--economy", fixtures().bad_economy.string()});
    CHECK(r.err.find("NotProductive") != std::string::npos);
}

TEST_CASE("help exits with 0") {
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("check-tc and verify") {
    const Result c = invoke({"check-tc", "--economy", fixtures().economy.string(), "--tc", fixtures().tc.string()});
    CHECK(c.code == 0);
    CHECK(c.out.find("0.9172727") != std::string::npos);

    const Result v = invoke({"verify", "--economy", fixtures().economy.string(), "--tc", fixtures().tc.string(),
                             "--wage", fixtures().wage.string()});
    CHECK(v.code == 0);
    CHECK(v.out.find("OkishioRise") != std::string::npos);
}

TEST_CASE("synth-tc reports the constructed change") {
    const Result r = invoke({"synth-tc", "--economy", fixtures().economy.string(), "--sector", "3", "--format", "json"});
    CHECK(r.code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["tc"]["labor"].get<double>() == doctest::Approx(0.12265625).epsilon(1e-12));
    CHECK(j["tc"]["sector"] == 3);
}

TEST_CASE("synth-wage is deterministic in the seed") {
    const std::vector<std::string> args{"synth-wage", "--economy", fixtures().economy.string(), "--tc",
                                        fixtures().tc.string(), "--seed", "5", "--format", "json"};
    const Result a = invoke(args);
    const Result b = invoke(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    std::vector<std::string> rising = args;
    rising.insert(rising.end(), {"--mode", "rising"});
    CHECK(invoke(rising).code == 0);
    std::vector<std::string> bad_pivot = args;
    bad_pivot.insert(bad_pivot.end(), {"--pivot", "1"});
    CHECK(invoke(bad_pivot).code == 2);
}

TEST_CASE("reproduce-example passes and the perturbed run fails") {
    const Result ok = invoke({"reproduce-example"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("all fixtures match") != std::string::npos);
    const Result perturbed = invoke({"reproduce-example", "--perturb"});
    CHECK(perturbed.code == 1);
    CHECK(perturbed.out.find("MISMATCH") != std::string::npos);
}

TEST_CASE("sweep output") {
    const Result empty = invoke({"sweep", "--count", "0"});
    CHECK(empty.code == 0);
    CHECK(std::count(empty.out.begin(), empty.out.end(), '\n') == 1);

    const std::vector<std::string> args{"sweep", "--seed", "1000", "--count", "100", "--threads", "3"};
    const Result a = invoke(args);
    const Result b = invoke({"sweep", "--seed", "1000", "--count", "100", "--threads", "1"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 101);

    const Result summary = invoke({"sweep", "--seed", "1000", "--count", "100", "--format", "json"});
    CHECK(summary.code == 0);
    CHECK(summary.out.find("\"violations\": 0") != std::string::npos);

    CHECK(invoke({"sweep", "--n-min", "5", "--n-max", "3"}).code == 2);
}

TEST_CASE("tolerance override is read from the environment") {
    ::setenv("OKISHIO_LAB_TOL", "1e-300", 1);
    CHECK(okishio::cli::residual_tolerance() == 1e-300);
    const Result r = invoke({"analyze", "--economy", fixtures().economy.string()});
    ::setenv("OKISHIO_LAB_TOL", "not-a-number", 1);
    CHECK(okishio::cli::residual_tolerance() == 1e-9);
    ::unsetenv("OKISHIO_LAB_TOL");
    // Only an exactly zero residual survives a tolerance of 1e-300.
    CHECK((r.code == 0 || r.code == 3));
    CHECK(okishio::cli::residual_tolerance() == 1e-9);
}

TEST_CASE("the installed binary returns the documented exit codes") {
    const std::string bin = OKISHIO_LAB_BIN;
    const auto status = [&](const std::string& args) {
        const int raw = std::system((bin + " " + args + " > /dev/null 2>&1").c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    };
    CHECK(status("reproduce-example") == 0);
    CHECK(status("reproduce-example --perturb") == 1);
    CHECK(status("analyze --economy " + fixtures().bad_economy.string()) == 2);
    CHECK(status("analyze --economy " + fixtures().economy.string()) == 0);
}
