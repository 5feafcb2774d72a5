#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

// Drives the installed binary end to end. The harness passes the binary and
// fixture locations through TRISTAR_BIN / TRISTAR_FIXTURE.

namespace {

using nlohmann::json;

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const char* bin = std::getenv("TRISTAR_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = "\"" + std::string(bin) + "\" " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = pclose(p);
    r.code = WEXITSTATUS(status);
    return r;
}

std::string fixture_path() {
    const char* f = std::getenv("TRISTAR_FIXTURE");
    REQUIRE(f != nullptr);
    return f;
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("spectrum: default point reproduces the headline levels") {
    RunResult r = run("spectrum");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["units"] == "jx");
    CHECK(j["agreement"].get<double>() < 1e-9);
    REQUIRE(j["levels"].size() == 5);
    CHECK(j["levels"][0]["energy"].get<double>() == -6.0);
    CHECK(j["levels"][0]["multiplicity"] == 4);
    CHECK(j["levels"][4]["energy"].get<double>() == 12.0);
    CHECK(j["levels"][4]["multiplicity"] == 2);
}

TEST_CASE("spectrum: degenerate and symmetric coupling points") {
    RunResult zero = run("spectrum --jx 0 --jy 0 --jz 0 --jp 0");
    REQUIRE(zero.code == 0);
    json jz = json::parse(zero.out);
    CHECK(jz["units"] == "absolute");
    REQUIRE(jz["levels"].size() == 1);
    CHECK(jz["levels"][0]["energy"].get<double>() == 0.0);
    CHECK(jz["levels"][0]["multiplicity"] == 16);

    RunResult iso = run("spectrum --jx 1 --jy 1 --jz 1 --jp 0 --format csv");
    REQUIRE(iso.code == 0);
    std::istringstream lines(iso.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "energy,multiplicity,label");
    int total = 0;
    std::string row;
    while (std::getline(lines, row)) {
        auto comma = row.find(',');
        total += std::stoi(row.substr(comma + 1));
    }
    CHECK(total == 16);
}

TEST_CASE("spectrum output is byte-deterministic") {
    RunResult a = run("spectrum --jy 1.7 --jp 0.3");
    RunResult b = run("spectrum --jy 1.7 --jp 0.3");
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
}

TEST_CASE("verify: green at the default point, red when pushed or corrupted") {
    RunResult ok = run("verify");
    REQUIRE(ok.code == 0);
    json j = json::parse(ok.out);
    CHECK(j["pass"] == true);
    CHECK(j["skipped"].empty());
    CHECK(j["checks"].size() >= 30);

    RunResult tight = run("verify --tol 1e-30");
    CHECK(tight.code == 2);

    RunResult corrupt = run("verify --catalog \"" + fixture_path() + "\"");
    CHECK(corrupt.code == 2);
    json jc = json::parse(corrupt.out);
    CHECK(jc["pass"] == false);
    bool named = false;
    for (const auto& ck : jc["checks"])
        if (ck["pass"] == false &&
            ck["name"].get<std::string>().find("catalog_residual:g2") != std::string::npos)
            named = true;
    CHECK(named);
}

TEST_CASE("verify: geometry-gated checks are skipped away from the ratio point") {
    RunResult r = run("verify --jy 0.4 --jz -0.7 --jp 0.9 --jx 1.3");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["pass"] == true);
    bool has_catalog = false;
    for (const auto& s : j["skipped"])
        if (s.get<std::string>().find("catalog_residual") != std::string::npos)
            has_catalog = true;
    CHECK(has_catalog);
}

TEST_CASE("stats: exchange matrices and failure modes") {
    RunResult r = run("stats --basis g1,g3 --perm pair");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["class"] == "exotic");
    CHECK(j["closed"] == true);
    CHECK(j["eta"]["re"][0][1].get<double>() == 1.0);
    CHECK(j["eta"]["re"][1][0].get<double>() == 1.0);
    CHECK(j["eta"]["re"][0][0].get<double>() == 0.0);

    RunResult z = run("stats --basis g2,g4 --perm pair");
    REQUIRE(z.code == 0);
    json jz = json::parse(z.out);
    CHECK(jz["eta"]["re"][0][0].get<double>() == -1.0);
    CHECK(jz["eta"]["re"][1][1].get<double>() == 1.0);

    RunResult bad = run("stats --basis o1,o2,o3,o4 --perm pair");
    CHECK(bad.code == 2);
    json jb = json::parse(bad.out);
    CHECK(jb["error"] == "NotOrthonormal");

    RunResult unknown = run("stats --basis nosuch --perm pair");
    CHECK(unknown.code == 1);
    json ju = json::parse(unknown.out);
    CHECK(ju["error"] == "UnknownName");

    RunResult badperm = run("stats --basis g1,g3 --perm diag");
    CHECK(badperm.code == 1);
}

TEST_CASE("phase: sector ratios") {
    RunResult r = run("phase --state S+B --perm s1s2");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    REQUIRE(j["ratios"].size() == 4);
    CHECK(j["ratios"][0]["config"] == 3);
    CHECK(j["ratios"][0]["im"].get<double>() == 1.0);
    CHECK(j["ratios"][1]["config"] == 5);
    CHECK(j["ratios"][1]["im"].get<double>() == -1.0);

    RunResult mism = run("phase --state g2 --perm s1s2");
    CHECK(mism.code == 2);
    json jm = json::parse(mism.out);
    CHECK(jm["error"] == "SupportMismatch");
}

TEST_CASE("entropy: marginal of the sector eigenstate") {
    RunResult r = run("entropy --state S+B --keep 2,3,4");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["entropy_nats"].get<double>() == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(j["entropy_bits"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(j["paper_convention_magnitude"].get<double>() ==
          doctest::Approx(0.980258).epsilon(1e-5));
    REQUIRE(j["eigenvalues"].size() == 8);

    RunResult bad = run("entropy --state S+B --keep 1,2,3,4");
    CHECK(bad.code == 2);
    CHECK(json::parse(bad.out)["error"] == "BadSubsystem");

    RunResult mangled = run("entropy --state S+B --keep x");
    CHECK(mangled.code == 1);
}

TEST_CASE("jw: rewriting report") {
    RunResult r = run("jw");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["clifford_ok"] == true);
    CHECK(j["bond_ok"] == true);
    CHECK(j["h_distance"].get<double>() < 1e-12);
    REQUIRE(j["plaquette_scalars"].size() == 4);
    CHECK(j["plaquette_scalars"][0] == "-1");
    CHECK(j["plaquette_scalars"][1] == "1");
    REQUIRE(j["sector_table"].size() == 8);
    for (const auto& row : j["sector_table"]) CHECK(row["in_spectrum"] == true);
}

TEST_CASE("sweep: row count, ordering, determinism") {
    RunResult r = run("sweep --param jp --from 0 --to 4 --steps 5");
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header.substr(0, 11) == "param,e1,e2");
    int rows = 0;
    std::string row;
    while (std::getline(lines, row)) {
        ++rows;
        std::istringstream cells(row);
        std::string cell;
        std::getline(cells, cell, ',');
        double prev = -1e18;
        while (std::getline(cells, cell, ',')) {
            double e = std::stod(cell);
            CHECK(e >= prev - 1e-12);
            prev = e;
        }
    }
    CHECK(rows == 5);
    CHECK(count_lines(r.out) == 6);

    RunResult again = run("sweep --param jp --from 0 --to 4 --steps 5");
    CHECK(again.out == r.out);

    RunResult one = run("sweep --param jy --from 2 --to 2 --steps 1");
    REQUIRE(one.code == 0);
    CHECK(count_lines(one.out) == 2);

    CHECK(run("sweep --param jq --from 0 --to 1 --steps 2").code == 1);
    CHECK(run("sweep --param jp --from 0 --to 1 --steps 0").code == 1);
}

TEST_CASE("config file supplies defaults without overriding flags") {
    std::string path = "cli_test_config.json";
    {
        std::ofstream f(path);
        f << R"({"couplings": {"jx": 0, "jy": 0, "jz": 0, "jp": 0}})";
    }
    RunResult r = run("spectrum --config " + path);
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["levels"].size() == 1);
    CHECK(j["levels"][0]["multiplicity"] == 16);

    // an explicit flag beats the config value
    RunResult mixed = run("spectrum --config " + path + " --jx 1");
    REQUIRE(mixed.code == 0);
    json jm = json::parse(mixed.out);
    CHECK(jm["levels"].size() > 1);
    std::remove(path.c_str());
}

TEST_CASE("usage errors exit 1") {
    CHECK(run("").code == 1);
    CHECK(run("nosuchcommand").code == 1);
    CHECK(run("spectrum --format yaml").code == 1);
}
