#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "ylat/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = ylat::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}   // namespace

TEST_CASE("signature subcommand matches the worked example") {
    Result r = run_cli({"signature", "--n", "5", "--monomial", "4,3,2,1,1,4"});
    CHECK(r.code == 0);
    json parsed = json::parse(r.out);
    CHECK(parsed["signature"] == json::array({2, 2, 3}));
}

TEST_CASE("chain subcommand returns the five-element chain") {
    Result r = run_cli({"chain", "--n", "5", "--monomial", "1,1,1,0,1,1", "--side", "right"});
    CHECK(r.code == 0);
    json parsed = json::parse(r.out);
    CHECK(parsed["elements"].size() == 5);
    CHECK(parsed["colors"] == json::array({1, 4, 5, 5}));
    CHECK(parsed["monotonic"] == true);
}

TEST_CASE("chain json schema is pinned") {
    Result r = run_cli({"chain", "--monomial", "1,0", "--side", "left"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "{\n"
          "  \"elements\": [\n"
          "    [\n"
          "      1,\n"
          "      0\n"
          "    ],\n"
          "    [\n"
          "      0,\n"
          "      1\n"
          "    ]\n"
          "  ],\n"
          "  \"colors\": [\n"
          "    1\n"
          "  ],\n"
          "  \"monotonic\": true\n"
          "}\n");
}

TEST_CASE("json array monomials round trip") {
    Result csv = run_cli({"tableau", "--monomial", "4,3,2,1,1,4"});
    Result arr = run_cli({"tableau", "--monomial", "[4,3,2,1,1,4]"});
    CHECK(csv.code == 0);
    CHECK(csv.out == arr.out);
}

TEST_CASE("byte identical output across runs") {
    for (auto args : std::vector<std::vector<std::string>>{
             {"enumerate", "--n", "3", "--m", "3"},
             {"levelset", "--n", "5", "--signature", "0,1,1"},
             {"decompose", "--n", "4", "--signature", "1,1,0"},
             {"scd", "--n", "4", "--m", "4"},
             {"verify", "--n", "3", "--m", "4"},
             {"export", "--n", "4", "--signature", "1,1,0"},
         }) {
        Result a = run_cli(args);
        Result b = run_cli(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
    }
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli({"signature"}).code == 2);                       // missing required flag
    CHECK(run_cli({"nonsense"}).code == 2);                        // unknown subcommand
    CHECK(run_cli({"enumerate", "--n", "2", "--m", "2", "--bogus"}).code == 2);
    CHECK(run_cli({"chain", "--monomial", "1,1", "--side", "up"}).code == 2);
    CHECK(run_cli({"signature", "--n", "4", "--monomial", "1,1"}).code == 2);
    CHECK(run_cli({"ideal", "--n", "5", "--r", "3"}).code == 2);   // r out of range
}

TEST_CASE("verify reports and exit codes") {
    Result ok = run_cli({"verify", "--n", "4", "--m", "4"});
    CHECK(ok.code == 0);
    json parsed = json::parse(ok.out);
    CHECK(parsed["ok"] == true);
    CHECK(parsed["singular"].empty());
    CHECK(parsed["partition_identity"]["ok"] == true);
    CHECK(parsed["rank_profile"]["gaussian_match"] == true);
    CHECK(parsed["sperner"] == true);

    Result with_singular = run_cli({"verify", "--n", "5", "--m", "5"});
    CHECK(with_singular.code == 0);   // covers still verify; nothing fails
    json report = json::parse(with_singular.out);
    CHECK(report["singular"].size() == 1);
}

TEST_CASE("scd subcommand reports fallback covers for singular signatures") {
    Result r = run_cli({"scd", "--n", "5", "--m", "5"});
    CHECK(r.code == 0);
    json parsed = json::parse(r.out);
    CHECK(parsed["singular"] == json::array({json::array({0, 1, 1})}));
    int covers = 0;
    for (const auto& fam : parsed["families"]) {
        if (fam["kind"] == "cover") ++covers;
        CHECK((fam["kind"] == "cover" || fam["kind"] == "symmetric-decomposition"));
    }
    CHECK(covers == 1);
}

TEST_CASE("ideal subcommand filters") {
    Result gens = run_cli({"ideal", "--n", "5", "--r", "2", "--generators"});
    json parsed = json::parse(gens.out);
    CHECK(parsed.contains("generators"));
    CHECK_FALSE(parsed.contains("components"));
    CHECK(parsed["generators"].size() == 4);

    Result both = run_cli({"ideal", "--n", "5", "--r", "2"});
    json parsed_both = json::parse(both.out);
    CHECK(parsed_both["components"].size() == 6);
    CHECK(parsed_both["generators"].size() == 4);
}

TEST_CASE("export emits ranked colored dot") {
    Result dot = run_cli({"export", "--n", "3", "--m", "2"});
    CHECK(dot.code == 0);
    CHECK(dot.out.find("digraph") != std::string::npos);
    CHECK(dot.out.find("rank=same") != std::string::npos);
    CHECK(dot.out.find("#1f77b4") != std::string::npos);

    Result chains = run_cli({"export", "--n", "5", "--signature", "0,1,1", "--chains", "transversal"});
    CHECK(chains.code == 0);
    CHECK(chains.out.find("style=bold") != std::string::npos);

    Result missing = run_cli({"export", "--n", "3"});
    CHECK(missing.code == 2);
}

TEST_CASE("poset cap from the environment") {
    setenv("TY_MAX_POSET", "10", 1);
    Result r = run_cli({"enumerate", "--n", "5", "--m", "5"});
    CHECK(r.code == 2);
    CHECK(r.err.find("cap") != std::string::npos);
    setenv("TY_MAX_POSET", "junk", 1);
    Result bad = run_cli({"enumerate", "--n", "2", "--m", "2"});
    CHECK(bad.code == 2);
    unsetenv("TY_MAX_POSET");
    Result fine = run_cli({"enumerate", "--n", "5", "--m", "5"});
    CHECK(fine.code == 0);
}
