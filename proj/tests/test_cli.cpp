// Integration tests driving the installed CLI binary: exit codes, error
// surfaces, file round trips.

#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef COEFFECTIVE_CLI_PATH
#error "COEFFECTIVE_CLI_PATH must be defined by the build"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& out_file) {
    std::string cmd = std::string(COEFFECTIVE_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
    int rc = std::system(cmd.c_str());
    std::ifstream in(out_file, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    std::remove(out_file.c_str());
    return {WEXITSTATUS(rc), ss.str()};
}

}  // namespace

TEST_CASE("les on cpn matches and exits 0") {
    auto r = run_cli("les --builtin cpn --n 2", "cli_out_1.txt");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("match: true") != std::string::npos);
}

TEST_CASE("hj rejects ring models with exit 2") {
    auto r = run_cli("hj --builtin cpn --n 2", "cli_out_2.txt");
    CHECK(r.exit_code == 2);
}

TEST_CASE("validate flags a tampered Lee form with exit 1 and the right code") {
    // emit the hopf4 schema file, tamper alpha to the non-closed e2, revalidate
    auto emit = run_cli("validate --builtin hopf4 --emit-model cli_hopf.json --format json",
                        "cli_out_3.txt");
    REQUIRE(emit.exit_code == 0);
    nlohmann::json j;
    {
        std::ifstream in("cli_hopf.json");
        in >> j;
    }
    j["alpha"][0]["blade"] = {2};
    {
        std::ofstream out("cli_hopf_bad.json", std::ios::binary);
        out << j.dump(2);
    }
    auto r = run_cli("validate --model cli_hopf_bad.json --format json", "cli_out_4.txt");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("alpha_not_closed") != std::string::npos);
    std::remove("cli_hopf.json");
    std::remove("cli_hopf_bad.json");
}

TEST_CASE("emitted builtin schema files round trip through validate") {
    auto emit = run_cli("validate --builtin kodaira_thurston --emit-model cli_kt.json",
                        "cli_out_5.txt");
    REQUIRE(emit.exit_code == 0);
    auto r = run_cli("validate --model cli_kt.json", "cli_out_6.txt");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("valid") != std::string::npos);
    std::remove("cli_kt.json");
}

TEST_CASE("unknown builtin exits 2 with error JSON on stderr") {
    auto r = run_cli("hj --builtin nonsense", "cli_out_7.txt");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("error") != std::string::npos);
}

TEST_CASE("symbol-check runs clean and reports the tally") {
    auto r = run_cli("symbol-check --shape symplectic --n 2 --samples 5 --seed 3",
                     "cli_out_8.txt");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("5/5 exact") != std::string::npos);
}

TEST_CASE("identical seeds give byte-identical JSON reports") {
    auto a = run_cli("les --builtin torus --n 2 --format json", "cli_out_9.txt");
    auto b = run_cli("les --builtin torus --n 2 --format json", "cli_out_10.txt");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    auto c = run_cli("symbol-check --shape g2 --samples 3 --seed 11 --format json",
                     "cli_out_11.txt");
    auto d = run_cli("symbol-check --shape g2 --samples 3 --seed 11 --format json",
                     "cli_out_12.txt");
    CHECK(c.exit_code == 0);
    CHECK(c.out == d.out);
}

TEST_CASE("csv output carries the documented columns") {
    auto r = run_cli("les --builtin torus --n 2 --format csv", "cli_out_13.txt");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("degree,dim_direct,dim_predicted,match", 0) == 0);
}
