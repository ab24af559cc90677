#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"

#include "epiprob/json_io.hpp"
#include "epiprob/scenarios.hpp"
#include "generators.hpp"

using namespace epiprob;
using nlohmann::json;

TEST_CASE("system serialization round-trips byte for byte") {
    SplitMix64 g(710);
    for (int it = 0; it < 30; ++it) {
        const auto psys = testgen::random_system(g);
        const json j = system_to_json(psys);
        const std::string once = canonical_dump(j);
        const auto back = system_from_json(json::parse(once));
        CHECK(back.sys() == psys.sys());
        CHECK(back.shared_prior() == psys.shared_prior());
        CHECK(canonical_dump(system_to_json(back)) == once);
    }
}

TEST_CASE("named scenarios survive the round trip") {
    for (const auto& psys :
         {scenarios::sleeping_beauty(), scenarios::sleeping_beauty_learning(),
          scenarios::two_coins(), scenarios::prisoner_clocks(),
          scenarios::prisoner_clocks_synchronous(), scenarios::forgetful_coin()}) {
        const std::string once = canonical_dump(system_to_json(psys));
        const auto back = system_from_json(json::parse(once));
        CHECK(back.sys() == psys.sys());
        CHECK(canonical_dump(system_to_json(back)) == once);
    }
}

TEST_CASE("probability fields reject floating point literals") {
    json j = system_to_json(scenarios::sleeping_beauty());
    j["runs"][0]["prob"] = 0.5;
    try {
        system_from_json(j);
        FAIL("a float literal must be rejected");
    } catch (const input_error& e) {
        CHECK(std::string(e.what()).find("floating-point") != std::string::npos);
    }
    j["runs"][0]["prob"] = "1/2";
    CHECK_NOTHROW(system_from_json(j));
    j["runs"][0]["prob"] = "0.5";
    CHECK_THROWS_AS(system_from_json(j), input_error);
}

TEST_CASE("malformed system files fail with precise messages") {
    CHECK_THROWS_AS(system_from_json(json::array()), input_error);
    CHECK_THROWS_AS(system_from_json(json{{"agents", json::array()}}), input_error);

    json j = system_to_json(scenarios::sleeping_beauty());
    json missing = j;
    missing["runs"][0].erase("states");
    CHECK_THROWS_AS(system_from_json(missing), input_error);

    json dup = j;
    dup["runs"][1]["name"] = "r1";
    CHECK_THROWS_AS(system_from_json(dup), input_error);

    json bad_sum = j;
    bad_sum["runs"][0]["prob"] = "2/3";
    try {
        system_from_json(bad_sum);
        FAIL("weights off from one must be rejected");
    } catch (const input_error& e) {
        CHECK(std::string(e.what()).find("sum") != std::string::npos);
    }
}

TEST_CASE("bet books parse and validate") {
    const json j = json::parse(R"({"bets":[
        {"id":"b1","offered_state":"time0","payoff_event":["r2"],
         "payoff":"30","cost":"15","accounting":"per-trial"},
        {"id":"b2","offered_state":"w","payoff_event":["r1"],
         "payoff":"20","cost":"10","accounting":"per-point"}]})");
    const BetBook book = book_from_json(j);
    REQUIRE(book.bets.size() == 2);
    CHECK(book.bets[0].at_time0());
    CHECK(book.bets[0].payoff == Rat(30));
    CHECK(book.bets[1].accounting == Bet::Accounting::per_point);

    json bad = j;
    bad["bets"][0]["accounting"] = "sometimes";
    CHECK_THROWS_AS(book_from_json(bad), input_error);
    bad = j;
    bad["bets"][0].erase("cost");
    CHECK_THROWS_AS(book_from_json(bad), input_error);
}

TEST_CASE("loading files reports open and parse failures as input errors") {
    CHECK_THROWS_AS(load_system_file("/no/such/file.json"), input_error);
    const std::string path = "bad_json_test_tmp.json";
    {
        std::ofstream out(path);
        out << "{ not json";
    }
    CHECK_THROWS_AS(load_system_file(path), input_error);
    CHECK_THROWS_AS(load_book_file(path), input_error);
    std::remove(path.c_str());
}

TEST_CASE("canonical dump is stable across key insertion orders") {
    json a;
    a["zeta"] = 1;
    a["alpha"] = 2;
    json b;
    b["alpha"] = 2;
    b["zeta"] = 1;
    CHECK(canonical_dump(a) == canonical_dump(b));
    CHECK(canonical_dump(a).back() == '\n');
}

TEST_CASE("audit reports serialize every exact value as a rational string") {
    const auto psys = scenarios::sleeping_beauty();
    const json j = to_json(ht_uniform_assign(psys, "sb", Point{"r1", 1}));
    CHECK(j["mass"]["r1@1"] == "1/2");
    CHECK(j["mass"]["r2@1"] == "1/4");

    const json cells = to_json(ht_assign(psys, "sb", Point{"r1", 1}));
    CHECK(cells["cells"]["r2"]["mass"] == "1/2");
    CHECK(cells["cells"]["r2"]["points"] == json::array({"r2@1", "r2@2"}));
}
