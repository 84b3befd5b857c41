// Drives the installed command-line binary end to end through popen: exit
// codes, CSV shape, JSON reports, determinism. The binary path arrives from
// the build as SOLCURVES_CLI_PATH.

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "solcurves/curve_spec.hpp"
#include "support/curve_generators.hpp"

namespace {

struct CmdResult {
    int code = -1;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    const std::string cmd = std::string(SOLCURVES_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) {
        r.out.append(buf, n);
    }
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::vector<double> fields_of(const std::string& line) {
    std::vector<double> fields;
    std::istringstream in(line);
    std::string cell;
    while (std::getline(in, cell, ',')) fields.push_back(std::stod(cell));
    return fields;
}

}  // namespace

TEST_CASE("frenet csv pins curvature and torsion in every row") {
    const CmdResult r = run_cli("frenet --curve builtin:triharmonic-helix --s-range -5:5:101");
    CHECK(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 102);
    CHECK(lines[0] == "s,x,y,z,T1,T2,T3,N1,N2,N3,B1,B2,B3,kappa,tau");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto f = fields_of(lines[i]);
        REQUIRE(f.size() == 15);
        CHECK(std::abs(f[13] - 0.5) <= 1e-10);
        CHECK(std::abs(f[14] - 0.5) <= 1e-10);
    }
    // Inclusive endpoints.
    CHECK(fields_of(lines[1])[0] == -5.0);
    CHECK(fields_of(lines[101])[0] == 5.0);
}

TEST_CASE("residual csv is identically zero on the vertical geodesic") {
    const CmdResult r = run_cli("residual --curve builtin:vertical-line --r 3 --s-range 0:1:11");
    CHECK(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 12);
    CHECK(lines[0] == "s,res1,res2,res3,res_norm,res_T,res_N,res_B");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto f = fields_of(lines[i]);
        REQUIRE(f.size() == 8);
        for (std::size_t k = 1; k < f.size(); ++k) CHECK(f[k] == 0.0);
    }
}

TEST_CASE("residual csv drops the Frenet columns below order three") {
    const CmdResult r =
        run_cli("residual --curve builtin:triharmonic-helix --r 2 --s-range 0:1:2");
    CHECK(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "s,res1,res2,res3,res_norm");
    // The second-order obstruction: norm exactly one quarter.
    CHECK(std::abs(fields_of(lines[1])[4] - 0.25) <= 1e-9);
}

TEST_CASE("verify emits an all-green json report") {
    const CmdResult r = run_cli("verify");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("all_pass").get<bool>());
    CHECK(j.at("theorem").at("all_pass").get<bool>());
    CHECK(j.at("theorem").at("checks").size() >= 10);
    REQUIRE(j.at("propositions").size() == 2);
    CHECK(j.at("propositions")[0].at("field").get<std::string>() == "V1");
    CHECK(j.at("propositions")[1].at("field").get<std::string>() == "V3");
    for (const auto& p : j.at("propositions")) CHECK(p.at("all_pass").get<bool>());
}

TEST_CASE("classify emits the quadruple as json") {
    const CmdResult r = run_cli("classify --samples 2000");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.at("roots").size() == 4);
    const double inv_root2 = 1.0 / std::sqrt(2.0);
    for (const auto& root : j.at("roots")) {
        CHECK(std::abs(std::abs(root.at("c1").get<double>()) - inv_root2) <= 1e-10);
        CHECK(std::abs(root.at("a").get<double>() - 0.5) <= 1e-10);
        CHECK(std::abs(std::abs(root.at("b").get<double>()) - 0.5) <= 1e-10);
    }
    CHECK(j.at("residual_at_root").get<double>() <= 1e-10);
}

TEST_CASE("integrate emits a trajectory and a drift summary") {
    const CmdResult r = run_cli(
        "integrate --kappa 0.5 --tau 0.5 --step 0.01 --s-max 1 --init-from-reference");
    CHECK(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 103);  // header + 101 states + summary
    CHECK(lines[0] == "s,x,y,z,T1,T2,T3,N1,N2,N3,B1,B2,B3");
    const std::string prefix = "# max_orthonormality_drift = ";
    REQUIRE(lines.back().rfind(prefix, 0) == 0);
    CHECK(std::stod(lines.back().substr(prefix.size())) <= 1e-10);
    // Final state sits on the closed form.
    const auto f = fields_of(lines[101]);
    const solcurves::CurveJet cj =
        solcurves::eval_curve(solcurves::testing::reference_helix_spec(), 1.0, 1);
    CHECK(std::abs(f[1] - cj.x.value()) <= 1e-9);
    CHECK(std::abs(f[2] - cj.y.value()) <= 1e-9);
    CHECK(std::abs(f[3] - cj.z.value()) <= 1e-9);
}

TEST_CASE("killing csv matches the closed forms") {
    const CmdResult r =
        run_cli("killing --curve builtin:triharmonic-helix --field V3 --s-range -1:1:5");
    CHECK(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] == "s,length,angle");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto f = fields_of(lines[i]);
        CHECK(std::abs(f[1] - std::sqrt(2.0)) <= 1e-12);
        CHECK(std::abs(f[2]) <= 1e-6);
    }

    const CmdResult h =
        run_cli("killing --curve 'builtin:constant-z?beta=0.5&c=0.3' --field V1 --s-range 0:2:3");
    CHECK(h.code == 0);
    for (const auto& line : lines_of(h.out)) {
        if (line.rfind("s,", 0) == 0) continue;
        const auto f = fields_of(line);
        CHECK(std::abs(f[1] - std::exp(0.3)) <= 1e-12);
        CHECK(std::abs(f[2] - 0.5) <= 1e-12);
    }
}

TEST_CASE("builtin query parameters reach the curve") {
    // branch 4 reverses the climb: z decreases with s.
    const CmdResult r = run_cli(
        "frenet --curve 'builtin:triharmonic-helix?c2=4&branch=4&cx=1&cy=-2' --s-range 0:1:2");
    CHECK(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 3);
    const auto f0 = fields_of(lines[1]);
    const auto f1 = fields_of(lines[2]);
    CHECK(std::abs(f0[3] - 0.5 * std::log(4.0)) <= 1e-12);
    CHECK(f1[3] < f0[3]);
    CHECK(std::abs(f0[13] - 0.5) <= 1e-10);
    CHECK(std::abs(f0[14] - 0.5) <= 1e-10);
}

TEST_CASE("curve json files load and malformed input is rejected") {
    namespace fs = std::filesystem;
    const fs::path good = fs::temp_directory_path() / "solcurves_cli_curve.json";
    {
        std::ofstream out(good);
        out << solcurves::curve_to_json_string(solcurves::testing::reference_helix_spec());
    }
    const CmdResult ok = run_cli("frenet --curve " + good.string() + " --s-range 0:1:3");
    CHECK(ok.code == 0);
    for (const auto& line : lines_of(ok.out)) {
        if (line.rfind("s,", 0) == 0) continue;
        CHECK(std::abs(fields_of(line)[13] - 0.5) <= 1e-10);
    }

    const fs::path bad = fs::temp_directory_path() / "solcurves_cli_bad.json";
    {
        std::ofstream out(bad);
        out << "{\"x\": {\"const\": 0}, \"w\": 1}";
    }
    CHECK(run_cli("frenet --curve " + bad.string() + " --s-range 0:1:3").code == 2);
    CHECK(run_cli("frenet --curve /no/such/file.json --s-range 0:1:3").code == 2);
    fs::remove(good);
    fs::remove(bad);
}

TEST_CASE("usage and input errors exit with code two and no csv") {
    const char* bad[] = {
        "frenet --curve builtin:nope --s-range 0:1:3",
        "frenet --curve builtin:triharmonic-helix",
        "frenet --curve builtin:triharmonic-helix --s-range 0:1",
        "frenet --curve builtin:triharmonic-helix --s-range 0:1:0",
        "frenet --curve 'builtin:triharmonic-helix?branch=7' --s-range 0:1:3",
        "frenet --curve builtin:constant-z --s-range 0:1:3",
        "frenet --curve 'builtin:constant-z?beta=0.7853981633974483' --s-range 0:1:3",
        "frenet --curve builtin:vertical-line --s-range 0:1:3",
        "residual --curve builtin:vertical-line --r 5 --s-range 0:1:3",
        "classify --samples 10",
        "integrate --kappa 0.5 --tau 0.5 --step 0 --s-max 1",
        "killing --curve builtin:vertical-line --field V9 --s-range 0:1:3",
        "nonsense",
        "",
    };
    for (const char* args : bad) {
        CAPTURE(args);
        const CmdResult r = run_cli(args);
        CHECK(r.code == 2);
        CHECK(r.out.empty());
    }
}

TEST_CASE("identical invocations produce byte-identical output") {
    const std::string cmd =
        "frenet --curve 'builtin:constant-z?beta=0.5&c=0.3&cx=1&cy=-2' --s-range -2:2:101";
    const CmdResult a = run_cli(cmd);
    const CmdResult b = run_cli(cmd);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.size() > 1000);

    const CmdResult c = run_cli("classify --samples 2000");
    const CmdResult d = run_cli("classify --samples 2000");
    CHECK(c.out == d.out);
}
