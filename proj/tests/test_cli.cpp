#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "shiftfam/cli.hpp"

using namespace shiftfam;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("analyze") {
    const auto r = run({"analyze", "--gens", "40,42,43,45"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["command"] == "analyze");
    CHECK(j["results"]["pseudo_frobenius"] == json({359, 361}));
    CHECK(j["results"]["ng"]["vector"] == json({361, 359, 361, 359}));

    const auto s = json::parse(run({"analyze", "--gens", "10,11,13,14"}).out);
    CHECK(s["results"]["almost_symmetric"] == true);
    CHECK(s["results"]["type"] == 3);

    CHECK(run({"analyze", "--gens", "4,6"}).code == 3);
    CHECK(run({"analyze", "--gens", "4,x"}).code == 2);
    CHECK(run({"analyze"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"analyze", "--gens", "4,6", "--bogus"}).code == 2);
}

TEST_CASE("family") {
    const auto pf = run({"family", "--shifts", "2,6,7", "--n", "88", "--lambda", "0..1", "--report", "pf"});
    REQUIRE(pf.code == 0);
    const auto rows = json::parse(pf.out)["results"]["pf"]["rows"];
    REQUIRE(rows.size() == 2);
    CHECK(rows[0]["pf_direct"] == json({281, 1141, 1145, 1237}));
    CHECK(rows[1]["pf_direct"] == json({302, 1327, 1331, 1430}));
    CHECK(pf.err.find("warning:") != std::string::npos);

    const auto bounds = run({"family", "--shifts", "2,3,5", "--n", "40", "--report", "bounds"});
    REQUIRE(bounds.code == 0);
    CHECK(json::parse(bounds.out)["results"]["bounds"]["bound"]["N"] == 36);

    const auto residue =
        run({"family", "--shifts", "2,3,7", "--n", "63", "--lambda", "0..5", "--report", "residue", "--csv"});
    REQUIRE(residue.code == 0);
    CHECK(residue.out == "lambda,n,residue\n0,63,9\n1,70,10\n2,77,11\n3,84,12\n4,91,13\n5,98,14\n");

    CHECK(run({"family", "--shifts", "8,12,14", "--n", "450"}).code == 3);
    CHECK(run({"family", "--shifts", "2,6,7", "--n", "80"}).code == 3);
    CHECK(run({"family", "--shifts", "2,6,7", "--n", "80", "--observed"}).code == 0);
    CHECK(run({"family", "--shifts", "2,3,7", "--n", "63", "--report", "frobenius"}).code == 3);
    CHECK(run({"family", "--shifts", "2,3,7", "--n", "63", "--report", "frobenius", "--observed"}).code == 0);
    CHECK(run({"family", "--shifts", "2,3,7", "--n", "63", "--report", "pf", "--csv"}).code == 2);
    CHECK(run({"family", "--shifts", "2,3,7", "--n", "63", "--report", "nope"}).code == 2);
    CHECK(run({"family", "--shifts", "2,3,7", "--n", "63", "--lambda", "3..1"}).code == 2);
    CHECK(run({"family", "--shifts", "2,3,7", "--n", "63", "--json", "--csv"}).code == 2);
}

TEST_CASE("family selectors all serialize") {
    const auto r = run({"family", "--shifts", "2,3,5", "--n", "40", "--lambda", "0..2", "--report",
                        "pf,frobenius,ng,residue,rtype,bounds", "--observed"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    for (const char* key : {"pf", "frobenius", "ng", "residue", "rtype", "bounds", "flags", "spec"})
        CHECK(j["results"].contains(key));
    CHECK(j["results"]["ng"]["transport"][2]["vector"] == json({361 + 170 + 20, 359 + 170 + 20, 551, 549}));
    CHECK(j["inputs"]["report"] == json({"bounds", "frobenius", "ng", "pf", "residue", "rtype"}));
}

TEST_CASE("verify") {
    const auto a = run({"verify", "--shifts", "2,6,7", "--n", "88", "--lambda", "1", "--show-wrong-bijection"});
    REQUIRE(a.code == 0);
    const auto table = json::parse(a.out)["results"]["wrong_bijection"][0];
    CHECK(table["p_next_psi_wrong"] == json({17, 85, 96, 100}));
    CHECK(table["p_next_actual"] == json({17, 92, 96, 100}));
    for (const auto& row : table["rows"]) CHECK(row["diverges"] == (row["i"] == 85));

    CHECK(run({"verify", "--shifts", "8,12,14", "--n", "449", "--lambda", "1"}).code == 0);
    CHECK(run({"verify", "--random", "7", "20", "--rk-max", "10"}).code == 0);
    CHECK(run({"verify", "--seed", "7", "--count", "3"}).code == 0);
    CHECK(run({"verify"}).code == 2);
    CHECK(run({"verify", "--shifts", "2,6,7"}).code == 2);
    CHECK(run({"verify", "--shifts", "2,6,7", "--n", "88", "--cap", "100"}).code == 3);
}

TEST_CASE("JSON output is a serialization fixed point") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"analyze", "--gens", "26,28,29,30"},
             {"family", "--shifts", "2,7,11", "--n", "200", "--lambda", "0..1", "--report", "pf,bounds", "--observed"},
             {"verify", "--shifts", "2,6,7", "--n", "88", "--show-wrong-bijection"}}) {
        const auto r = run(args);
        REQUIRE(r.code == 0);
        CHECK(json::parse(r.out).dump(2) + "\n" == r.out);
        CHECK(run(args).out == r.out);
    }
}

TEST_CASE("help exits cleanly") {
    const auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("family") != std::string::npos);
}
