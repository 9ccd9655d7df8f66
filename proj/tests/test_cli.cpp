#include <doctest.h>

#include "hookmonoid/cli.hpp"

#include <json.hpp>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
    int code = 0;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = hookmonoid::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json parse_out(const RunResult& r) { return nlohmann::json::parse(r.out); }

} // namespace

TEST_CASE("count subcommands") {
    auto r = run_cli({"count", "n", "13"});
    CHECK(r.code == 0);
    CHECK(r.out == "101\n");

    for (const std::string method : {"hooktypes", "series", "hdecomp", "oracle"}) {
        r = run_cli({"count", "n", "13", "--method", method});
        CHECK(r.code == 0);
        CHECK(r.out == "101\n");
    }

    for (const std::string method :
         {"hooktypes", "recurrence", "closed", "series", "oracle"}) {
        r = run_cli({"count", "nr", "13", "2", "--method", method});
        CHECK(r.code == 0);
        CHECK(r.out == "70\n");
    }

    r = run_cli({"count", "hooktype", "7,4"});
    CHECK(r.code == 0);
    CHECK(r.out == "8\n");

    const auto j = parse_out(run_cli({"count", "n", "13", "--json"}));
    CHECK(j["n"] == 13);
    CHECK(j["value"] == "101");

    const auto jr = parse_out(run_cli({"count", "nr", "13", "2", "--json"}));
    CHECK(jr["r"] == 2);
    CHECK(jr["value"] == "70");

    CHECK(run_cli({"count", "n", "0"}).code == 1);
    CHECK(run_cli({"count", "n", "13", "--method", "bogus"}).code == 1);
    CHECK(run_cli({"count"}).code == 1);
}

TEST_CASE("factor and product") {
    auto r = run_cli({"factor", "2,2"});
    CHECK(r.code == 0);
    CHECK(r.out == "hooks [1],[1]\nhooktype (3,1)\ndelta (1,1)\n");

    r = run_cli({"product", "1", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "2,2\n");

    r = run_cli({"product", "0", "4,2,1"});
    CHECK(r.code == 0);
    CHECK(r.out == "4,2,1\n");

    const auto j = parse_out(run_cli({"factor", "4,4,2,1", "--json"}));
    CHECK(j["partition"] == std::vector<long long>{4, 4, 2, 1});
    CHECK(j["hooks"].size() == 2);
    CHECK(j["hooks"][0] == std::vector<long long>{1, 1});
    CHECK(j["hooks"][1] == std::vector<long long>{3, 1});
    CHECK(j["hooktype"] == std::vector<long long>{7, 4});
    CHECK(j["delta"] == std::vector<long long>{2, 4});

    r = run_cli({"factor", "0"});   // the identity factors into no hooks
    CHECK(r.code == 0);
    CHECK(r.out == "hooks\nhooktype ()\ndelta ()\n");

    CHECK(run_cli({"factor", "2,3"}).code == 1);
}

TEST_CASE("convert") {
    auto r = run_cli({"convert", "12", "--from", "pi", "--to", "hooktype", "--n", "13"});
    CHECK(r.code == 0);
    CHECK(r.out == "(13)\n");

    r = run_cli({"convert", "10,3", "--from", "hooktype", "--to", "delta", "--n", "13"});
    CHECK(r.code == 0);
    CHECK(r.out == "(6,3)\n");

    const auto j = parse_out(run_cli({"convert", "6,3", "--from", "delta", "--to", "pi",
                                      "--n", "13", "--json"}));
    CHECK(j["result"] == std::vector<long long>{7, 2});
    CHECK(j["from"] == "delta");
    CHECK(j["to"] == "pi");

    CHECK(run_cli({"convert", "10,3", "--from", "hooktype", "--to", "delta"}).code == 1);
    CHECK(run_cli({"convert", "10,3", "--from", "hooktype", "--to", "delta",
                   "--n", "14"}).code == 1);
    CHECK(run_cli({"convert", "1,2", "--from", "pi", "--to", "delta", "--n", "7"}).code == 1);
}

TEST_CASE("matrix") {
    auto r = run_cli({"matrix", "2,2"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 0 0\n4 1 0\n4 2 1\n");

    r = run_cli({"matrix", "--delta", "2,1,2"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 3 10\n0 1 5\n0 0 1\n");

    const auto j = parse_out(run_cli({"matrix", "2,2", "--json"}));
    CHECK(j["shape"] == "lower");
    CHECK(j["rows"][1][0] == "4");

    const auto ju = parse_out(run_cli({"matrix", "--delta", "2,1,2", "--json"}));
    CHECK(ju["shape"] == "upper");
    CHECK(ju["rows"][0][2] == "10");

    CHECK(run_cli({"matrix"}).code == 1);
    CHECK(run_cli({"matrix", "2,2", "--delta", "2,1,2"}).code == 1);
}

TEST_CASE("classes") {
    auto r = run_cli({"classes", "13"});
    CHECK(r.code == 0);
    CHECK(r.out.find("hooktype") == 0);
    CHECK(r.out.find("(9,3,1)") != std::string::npos);
    CHECK(r.out.find("total 101\n") != std::string::npos);

    const auto j = parse_out(run_cli({"classes", "13", "--json"}));
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 10);
    CHECK(j[0]["hooktype"] == std::vector<long long>{13});
    CHECK(j[0]["card"] == "13");
    long long total = 0;
    for (const auto& c : j) total += std::stoll(c["card"].get<std::string>());
    CHECK(total == 101);
}

TEST_CASE("dh and extremes") {
    auto r = run_cli({"dh", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "5\n");

    r = run_cli({"extremes", "4,2,1,1"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "min (4,2,1,1) weight 21\nmax (1,1,2,4) weight 31\nspread 10\n");

    const auto j = parse_out(run_cli({"extremes", "4,2,1,1", "--json"}));
    CHECK(j["min_weight"] == "21");
    CHECK(j["max_weight"] == "31");
    CHECK(j["spread"] == "10");

    CHECK(run_cli({"dh", "0"}).code == 1);
    CHECK(run_cli({"extremes", "2,0"}).code == 1);
}

TEST_CASE("render") {
    auto r = run_cli({"render", "3,2"});
    CHECK(r.code == 0);
    CHECK(r.out == "###\n##\n");

    r = run_cli({"render", "3,2", "--cartesian"});
    CHECK(r.code == 0);
    CHECK(r.out == "##\n###\n");

    r = run_cli({"render", "3,3,3", "--hooks"});
    CHECK(r.code == 0);
    CHECK(r.out == "111\n122\n123\n");

    const auto j = parse_out(run_cli({"render", "3,2", "--json"}));
    CHECK(j["rows"] == std::vector<std::string>{"###", "##"});

    CHECK(run_cli({"render", "2,3"}).code == 1);
}

TEST_CASE("verify") {
    auto r = run_cli({"verify", "--max-n", "6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("all identities hold up to n = 6") != std::string::npos);

    const auto j = parse_out(run_cli({"verify", "--max-n", "6", "--json"}));
    CHECK(j["ok"] == true);
    CHECK(j["max_n"] == 6);
    CHECK(j["checks"].size() == 21);
    for (const auto& c : j["checks"]) CHECK(c["ok"] == true);

    CHECK(run_cli({"verify", "--max-n", "0"}).code == 1);
}

TEST_CASE("series truncation override") {
    setenv("HOOKMONOID_SERIES_N", "8", 1);
    auto r = run_cli({"count", "n", "8", "--method", "series"});
    CHECK(r.code == 0);
    CHECK(r.out == "22\n");

    r = run_cli({"count", "n", "10", "--method", "series"});
    CHECK(r.code == 1);
    CHECK(r.err.find("truncation") != std::string::npos);

    setenv("HOOKMONOID_SERIES_N", "zero", 1);
    r = run_cli({"count", "n", "5", "--method", "series"});
    CHECK(r.code == 1);
    CHECK(r.err.find("HOOKMONOID_SERIES_N") != std::string::npos);

    unsetenv("HOOKMONOID_SERIES_N");
    r = run_cli({"count", "n", "10", "--method", "series"});
    CHECK(r.code == 0);
    CHECK(r.out == "42\n");
}

TEST_CASE("usage and help") {
    CHECK(run_cli({}).code == 1);
    CHECK(run_cli({"bogus"}).code == 1);
    CHECK(run_cli({"render"}).code == 1);

    auto r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(!r.out.empty());

    r = run_cli({"count", "--help"});
    CHECK(r.code == 0);
    CHECK(!r.out.empty());
}
