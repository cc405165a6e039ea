#include "cli.hpp"

#include "lambda/io.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <random>
#include <sstream>

using namespace lambda;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("reduce and diff")
{
    CHECK(run({"reduce", "--p", "3", "m0 l2"}).out == "- m1 l1\n");
    CHECK(run({"reduce", "--p", "5", "m0 m2"}).out == "- m1 m1\n");
    CHECK(run({"diff", "--p", "3", "m2"}).out == "l1 m1 + m1 l1 - l2 m0\n");
    const auto j = json::parse(run({"reduce", "--p", "3", "--format", "json", "m0 l2"}).out);
    CHECK(j["terms"][0]["coeff"] == 2);
}

TEST_CASE("text output re-parses through the command line")
{
    for (const char* word : {"m1 m2 l1", "m2 l1", "m3 l2 l1", "m2 m4 l3"}) {
        const auto d1 = run({"diff", "--p", "3", word});
        REQUIRE(d1.code == 0);
        std::string text = d1.out.substr(0, d1.out.size() - 1);
        const auto again = run({"reduce", "--p", "3", text});
        CHECK(again.out == d1.out);
    }
}

TEST_CASE("lemma2")
{
    const auto r = run({"lemma2", "--p", "3", "--k", "1"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["det"] == 0);
    CHECK(j["is_isomorphism"] == false);
    CHECK(j["k"] == 1);
    CHECK(j.contains("det_formula"));
    CHECK(j.contains("matrix"));
    CHECK(run({"lemma2", "--p", "5", "--k", "2", "--format", "text"}).out.find("is_isomorphism=true") !=
          std::string::npos);
}

TEST_CASE("certify")
{
    CHECK(run({"certify", "--n", "9"}).out == R"({"k":2,"kind":"ODD_PRIMARY","n":9,"p":3,"statement":"A"})"
                                              "\n");
    const auto range = run({"certify", "--from", "2", "--to", "20"});
    CHECK(std::count(range.out.begin(), range.out.end(), '\n') == 19);
    CHECK(run({"certify", "--n", "17", "--all"}).out.find(R"("p":5)") != std::string::npos);
    CHECK(run({"certify", "--n", "1"}).code == 1);
    CHECK(run({"certify"}).code == 1);
}

TEST_CASE("mori")
{
    const auto j = json::parse(run({"mori", "--p", "3", "--final", "--k", "1"}).out);
    CHECK(j["verdict"] == true);
    CHECK(j["target_dimension"] == 113);
    const auto e = json::parse(run({"mori", "--p", "3", "--f", "1", "--g", "0", "--i", "8", "--j", "3", "--n", "2"}).out);
    CHECK(e["holds"] == true);
}

TEST_CASE("basis, hopf-check, prop-check")
{
    CHECK(run({"basis", "--p", "3", "--n", "2", "--m", "8", "--l", "1", "--ideal", "full"}).out == "m2\n");
    const auto h = json::parse(run({"hopf-check", "--p", "3", "--max-deg", "20"}).out);
    CHECK(h["ses_ok"] == true);
    CHECK(h["chain_ok"] == true);
    const auto pc = json::parse(run({"prop-check", "--p", "3", "--k", "4"}).out);
    CHECK(pc["hits"] == false);
}

TEST_CASE("e2 output is deterministic across formats and jobs")
{
    const auto a = run({"e2", "--p", "3", "--n", "1", "--max-deg", "30"});
    const auto b = run({"e2", "--p", "3", "--n", "1", "--max-deg", "30", "--jobs", "2"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto csv = run({"e2", "--p", "3", "--n", "1", "--max-deg", "30", "--format", "csv"}).out;
    CHECK(csv.rfind("p,n,ideal,m,l,dim_e1,dim_e2,pi_index\n", 0) == 0);
    CHECK(csv.find("3,1,lambda,3,1,1,1,6\n") != std::string::npos);
    const auto js = json::parse(run({"e2", "--p", "3", "--n", "1", "--max-deg", "30", "--format", "json"}).out);
    CHECK(js.is_array());
}

TEST_CASE("cache directory: cold and warm bytes match")
{
    std::random_device rd;
    const auto dir = std::filesystem::temp_directory_path() / ("lambda-cli-" + std::to_string(rd()));
    const std::vector<std::string> args{"e2", "--p", "3", "--n", "1", "--max-deg", "30", "--cache-dir", dir.string()};
    const auto plain = run({"e2", "--p", "3", "--n", "1", "--max-deg", "30"});
    const auto cold = run(args);
    const auto warm = run(args);
    CHECK(cold.out == plain.out);
    CHECK(warm.out == cold.out);
    CHECK(warm.err.find(" 0 misses") != std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST_CASE("exit codes")
{
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"reduce", "--p", "4", "m1"}).code == 1);
    CHECK(run({"reduce", "--p", "9", "m1"}).code == 1);
    CHECK(run({"reduce", "--p", "3", "q7"}).code == 1);
    CHECK(run({"reduce", "--p", "3", "--bogus", "m1"}).code == 1);
    CHECK(run({"reduce", "--p", "3", "--format", "xml", "m1"}).code == 1);
    CHECK(run({"reduce", "--p", "3", "--term-budget", "3", "l1 l20 l20"}).code == 2);
    CHECK(run({"lemma2", "--p", "3", "--k", "0"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

}
