#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hookbias/cli.hpp"

using namespace hookbias;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("btable csv matches the golden fixture")
{
    CliResult r = run({"btable", "--t", "3", "--k", "2", "--n-max", "20", "--format", "csv"});
    CHECK(r.code == 0);
    std::ifstream fixture(std::string(FIXTURES_DIR) + "/btable_3_2_20.csv");
    REQUIRE(fixture.good());
    std::stringstream want;
    want << fixture.rdbuf();
    CHECK(r.out == want.str());
    // header plus 21 data rows
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 22);
    CHECK(r.out.substr(0, 8) == "n,b\n0,0\n");
}

TEST_CASE("btable json shape")
{
    CliResult r = run({"btable", "--t", "4", "--k", "2", "--n-max", "8", "--format", "json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["t"] == 4);
    CHECK(j["k"] == 2);
    CHECK(j["values"]["0"] == 0);
    CHECK(j["values"].size() == 9);
}

TEST_CASE("btable output is deterministic and job-count independent")
{
    CliResult once = run({"btable", "--t", "3", "--k", "2", "--n-max", "14"});
    CliResult again = run({"btable", "--t", "3", "--k", "2", "--n-max", "14"});
    CliResult parallel = run({"btable", "--t", "3", "--k", "2", "--n-max", "14", "--jobs", "4"});
    CHECK(once.out == again.out);
    CHECK(once.out == parallel.out);
}

TEST_CASE("theorem tables dominate pointwise")
{
    CliResult b4 = run({"btable", "--t", "4", "--k", "2", "--n-max", "20"});
    CliResult b3 = run({"btable", "--t", "3", "--k", "2", "--n-max", "20"});
    std::istringstream s4(b4.out), s3(b3.out);
    std::string l4, l3;
    std::getline(s4, l4);
    std::getline(s3, l3); // headers
    while (std::getline(s4, l4) && std::getline(s3, l3)) {
        long v4 = std::stol(l4.substr(l4.find(',') + 1));
        long v3 = std::stol(l3.substr(l3.find(',') + 1));
        CHECK(v4 >= v3);
    }
}

TEST_CASE("verify subcommand exit codes")
{
    CHECK(run({"verify", "theorem", "--n-max", "16"}).code == 0);
    CHECK(run({"verify", "prior-biases", "--n-max", "14"}).code == 0);
    CHECK(run({"verify", "no-such-claim"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"btable", "--t", "1", "--k", "2", "--n-max", "5"}).code == 2);
}

TEST_CASE("verify phi and appendix pass on their clean ranges")
{
    CHECK(run({"verify", "phi", "--n-max", "16"}).code == 0);
    // the correspondence is collision-free below level 34
    CHECK(run({"verify", "appendix", "--n-max", "33"}).code == 0);
}

TEST_CASE("the two documented discrepancies surface as failures")
{
    // series: the computed B2a support carries the extra index 14
    CliResult series = run({"verify", "series", "--order", "60"});
    CHECK(series.code == 1);
    std::istringstream lines(series.out);
    std::string line;
    while (std::getline(lines, line)) {
        auto j = nlohmann::json::parse(line);
        if (j["status"] == "fail")
            CHECK(j["claim"] == "series.negative-support.B2a");
    }
    // appendix: image collisions from level 34 on
    CliResult appendix = run({"verify", "appendix", "--n-max", "34"});
    CHECK(appendix.code == 1);
}

TEST_CASE("verify emits one json record per report")
{
    CliResult r = run({"verify", "conjecture", "--t-min", "3", "--t-max", "4", "--n-max", "12"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    int records = 0;
    while (std::getline(lines, line)) {
        auto j = nlohmann::json::parse(line);
        CHECK(j.contains("claim"));
        CHECK(j.contains("status"));
        CHECK(j.contains("counterexamples"));
        CHECK(j["status"] == "pass");
        CHECK(j["note"] == "numeric evidence, not proof (only t=3 is proved)");
        ++records;
    }
    CHECK(records == 1);
}

TEST_CASE("table1 subcommand")
{
    CliResult r = run({"table1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("(16) | (16,5,1), (16,4,2), (16,2^3) | (15) | (15,7), (15,6,1), (15,3^2,1)") !=
          std::string::npos);
    CHECK(r.out.find("(20,2) | (21) | (21,1)") != std::string::npos);
    CHECK(r.out.find("(19,3), (18,3,1), (13,9)") != std::string::npos);
}

TEST_CASE("out flag writes the data file")
{
    std::string path = "cli_out_test.csv";
    CliResult r = run({"btable", "--t", "2", "--k", "2", "--n-max", "5", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    REQUIRE(f.good());
    std::string header;
    std::getline(f, header);
    CHECK(header == "n,b");
    f.close();
    std::remove(path.c_str());
}
