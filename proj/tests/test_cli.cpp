#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "hlmaj/cli.hpp"
#include "hlmaj/serialize.hpp"

using namespace hlmaj;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "hlmaj");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<json> lines(const std::string& text) {
    std::vector<json> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(json::parse(line));
    return out;
}

}  // namespace

TEST_CASE("stats") {
    const auto r = run({"stats", "3,5,1,2,4"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["inv"] == 5);
    CHECK(j["maj"] == 2);
    CHECK(j["Des"] == json::array({2}));
    CHECK(j["Inv"] == json::parse("[[3,1],[3,2],[5,1],[5,2],[5,4]]"));
    CHECK(run({"stats", "3,4,1,5,2"}).out.find("\"majt\":[1,0,2,2,1]") != std::string::npos);
    const auto table = run({"stats", "3,4,1,5,2", "--format", "table"});
    CHECK(table.code == 0);
    CHECK(table.out.find("invt: (2,3,0,0,0)") != std::string::npos);
    CHECK(run({"stats", "1,1,2"}).code == kExitParse);
}

TEST_CASE("enumerate streams one object per line and a count") {
    for (const std::string kind : {"D", "Jmaj", "R0", "PF0"}) {
        const auto r = run({"enumerate", kind, "3,1"});
        CAPTURE(kind);
        REQUIRE(r.code == 0);
        const auto js = lines(r.out);
        REQUIRE(js.size() == 13);
        CHECK(js.back() == json{{"count", 12}, {"target", 12}});
    }
    const auto r0 = lines(run({"enumerate", "R0", "2,1"}).out);
    for (std::size_t i = 0; i + 1 < r0.size(); ++i) {
        const auto t = ribbon_from_json(r0[i]);
        CHECK(r0[i]["area"] == area_ribbon(t));
        CHECK(r0[i]["psi"] == psi(t));
    }
    const auto pf = lines(run({"enumerate", "PF0", "2,1"}).out);
    for (std::size_t i = 0; i + 1 < pf.size(); ++i) CHECK(is_valid_parking_function(parking_from_json(pf[i])));
}

TEST_CASE("hl routes agree and print the expansion") {
    const auto r = run({"hl", "2,1,1", "--route", "both"});
    REQUIRE(r.code == 0);
    const auto js = lines(r.out);
    CHECK(js.back() == json{{"diff", json::array()}});
    const auto single = lines(run({"hl", "2,1,1"}).out);
    CHECK(single.front() == json{{"mu", {4}}, {"coeffs", {{"0", 1}}}});
    CHECK(single.size() * 2 + 1 == js.size());
    const auto twisted = lines(run({"hl", "3,1", "--twisted", "--route", "ribbons"}).out);
    REQUIRE(twisted.size() == 2);
    CHECK(twisted[0] == json{{"mu", {2, 1, 1}}, {"coeffs", {{"1", 1}}}});
    CHECK(twisted[1] == json{{"mu", {1, 1, 1, 1}}, {"coeffs", {{"0", 1}, {"1", 3}}}});
}

TEST_CASE("verify reports every check") {
    const auto r = run({"verify", "2,2"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["basis_ok"] == true);
    CHECK(j["leading_terms_ok"] == true);
    CHECK(j["phi_ok"] == true);
    CHECK(j["minimal_ribbons_ok"] == true);
    CHECK(j["parabolic"].size() == 5);
    CHECK(tpoly_from_json(j["hilbert"]).at_one() == 6);
    const auto only = json::parse(run({"verify", "3,2", "--checks", "parabolic", "--mu", "2,2,1"}).out);
    REQUIRE(only["parabolic"].size() == 1);
    CHECK(only["parabolic"][0]["ok"] == true);
    CHECK(only["parabolic"][0]["elements"].size() == 5);
    CHECK_FALSE(only.contains("basis_ok"));
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == kExitParse);
    CHECK(run({"frobnicate"}).code == kExitParse);
    CHECK(run({"hl", "1,2"}).code == kExitParse);
    CHECK(run({"enumerate", "X", "2,1"}).code == kExitParse);
    CHECK(run({"verify", "2,1", "--checks", "nope"}).code == kExitParse);
    CHECK(run({"verify", "2,1", "--mu", "2,2"}).code == kExitParse);
    const auto big = run({"verify", "4,3"});
    CHECK(big.code == kExitBound);
    CHECK(big.err.find("bound") != std::string::npos);
    CHECK(run({"enumerate", "D", "5,3", "--n-bound", "7"}).code == kExitBound);
    CHECK(run({"hl", "2,1", "--n-bound", "2"}).code == kExitBound);
}

TEST_CASE("environment bound") {
    setenv("HLMAJ_N_BOUND", "3", 1);
    CHECK(run({"hl", "2,2"}).code == kExitBound);
    CHECK(run({"hl", "2,2", "--n-bound", "4"}).code == 0);
    unsetenv("HLMAJ_N_BOUND");
    CHECK(run({"hl", "2,2"}).code == 0);
}

TEST_CASE("output is deterministic") {
    CHECK(run({"enumerate", "R0", "2,2,1"}).out == run({"enumerate", "R0", "2,2,1"}).out);
    CHECK(run({"verify", "3,1", "--format", "table"}).out == run({"verify", "3,1", "--format", "table"}).out);
}

TEST_CASE("json round trips") {
    const auto e = hl_via_descents(Partition({2, 2, 1}));
    CHECK(expansion_from_json(expansion_to_json(e)) == e);
    const ParkingFunction p{{0, 0, 1, 0, 0, 1, 2, 2, 3}, {2, 4, 7, 9, 1, 5, 8, 3, 6}};
    CHECK(parking_from_json(parking_to_json(p)) == p);
    for (const auto& t : enumerate_R0(Partition({3, 2}))) {
        CHECK(ribbon_from_json(ribbon_to_json(t)) == t);
        CHECK(ribbon_from_json(ribbon_to_json(t.relaid({2}, 1))).components() == t.relaid({2}, 1).components());
    }
    mpz_class big;
    big.set_str("123456789012345678901234567890", 10);
    CHECK(mpz_from_json(mpz_to_json(big)) == big);
    CHECK(mpz_from_json(mpz_to_json(mpz_class(-7))) == -7);
}
