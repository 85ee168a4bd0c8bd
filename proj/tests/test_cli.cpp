#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "ncm/cli.hpp"

namespace {

struct CliRun {
    int code = 0;
    std::string out;
    std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = ncm::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

long line_count(const std::string& text) {
    long lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    return lines;
}

}  // namespace

TEST_CASE("selftest prints one line per pinned example") {
    CliRun r = run_cli({"selftest"});
    CHECK(r.code == 0);
    CHECK(line_count(r.out) == 7);
    CHECK(r.out.find("selftest passed") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(run_cli({"selftest", "--paper-examples"}).code == 0);
}

TEST_CASE("verify master emits a JSON report on stdout") {
    CliRun r = run_cli({"verify", "master", "--class", "commutative", "--m", "2",
                        "--max-degree", "3"});
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.at("schema_version") == 1);
    CHECK(j.at("engine_version") == "1.0.0");
    CHECK(j.at("check") == "master");
    CHECK(j.at("matrix_class") == "commutative");
    CHECK(j.at("m") == 2);
    CHECK(j.at("truncation") == 3);
    CHECK(j.at("pass") == true);
    REQUIRE(j.at("checks").size() == 1);
    CHECK(j.at("checks")[0].at("pass") == true);
}

TEST_CASE("--out writes the report to a file and a summary to stdout") {
    std::filesystem::path path =
        std::filesystem::temp_directory_path() / "ncm_cli_test_report.json";
    CliRun r = run_cli({"verify", "master", "--class", "right-quantum", "--m", "2",
                        "--max-degree", "3", "--out", path.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("PASS master right-quantum m=2 N=3", 0) == 0);

    std::ifstream file(path);
    REQUIRE(file.good());
    nlohmann::json j = nlohmann::json::parse(file);
    CHECK(j.at("pass") == true);
    CHECK(j.at("checks")[0].at("components").size() > 0);
    file.close();
    std::filesystem::remove(path);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"verify", "master", "--max-degree", "2"}).code == 2);  // missing --m
    CHECK(run_cli({"verify", "master", "--class", "nope", "--m", "2", "--max-degree",
                   "2"})
              .code == 2);
    CHECK(run_cli({"verify", "master", "--class", "right-quantum", "--gamma", "01",
                   "--m", "2", "--max-degree", "2"})
              .code == 2);
    CHECK(run_cli({"verify", "quasidet", "--class", "super:11", "--m", "2",
                   "--max-degree", "2"})
              .code == 2);
    CHECK(run_cli({"verify", "beta", "--m", "2", "--max-degree", "2", "--beta", "0"})
              .code == 2);
}

TEST_CASE("a failed verification exits with code 1 and pass false") {
    CliRun r = run_cli({"verify", "beta", "--m", "2", "--max-degree", "2", "--beta", "2"});
    CHECK(r.code == 1);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.at("pass") == false);
    CHECK(j.at("info").at("beta") == "2");
}

TEST_CASE("an enumeration too large for the guard exits with code 3") {
    CliRun r = run_cli({"enumerate", "--kind", "o", "--type", "9,9,9"});
    CHECK(r.code == 3);
    CHECK(r.err.find("guard") != std::string::npos);
}

TEST_CASE("biject prints the sorting chain") {
    CliRun r = run_cli({"biject", "--word", "a12,a11,a21"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "a12,a11,a21 rank=0\na12,a21,a11 rank=1\n");

    // p-sequences are fixed points: one line
    CHECK(run_cli({"biject", "--word", "a12,a21,a11"}).out == "a12,a21,a11 rank=1\n");

    // non-chain words are rejected
    CHECK(run_cli({"biject", "--word", "a22,a12,a21,a11"}).code == 2);
}

TEST_CASE("enumerate lists sequences in word order") {
    CliRun r = run_cli({"enumerate", "--kind", "o", "--type", "1,1"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "a11,a22\na12,a21\n");
    CHECK(run_cli({"enumerate", "--kind", "balanced", "--type", "1,1"}).out ==
          "a11,a22\na12,a21\na21,a12\na22,a11\n");
}

TEST_CASE("verify ks records the type vector") {
    CliRun r = run_cli({"verify", "ks", "--m", "1", "--k", "2"});
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.at("check") == "ks");
    CHECK(j.at("pass") == true);
    CHECK(j.at("info").at("k") == "2");
}

TEST_CASE("both gamma spellings select the same super class") {
    CliRun packed = run_cli({"verify", "master", "--class", "super", "--gamma", "011",
                             "--m", "3", "--max-degree", "2"});
    CliRun listed = run_cli({"verify", "master", "--class", "super", "--gamma", "0,1,1",
                             "--m", "3", "--max-degree", "2"});
    REQUIRE(packed.code == 0);
    REQUIRE(listed.code == 0);
    nlohmann::json jp = nlohmann::json::parse(packed.out);
    nlohmann::json jl = nlohmann::json::parse(listed.out);
    CHECK(jp.at("matrix_class") == "super:011");
    CHECK(jp.at("matrix_class") == jl.at("matrix_class"));
    CHECK(jp.at("gamma") == nlohmann::json::array({0, 1, 1}));
}
