#include "doctest.h"

#include "isoclass/acceptance.hpp"
#include "isoclass/report.hpp"

using namespace isoclass;

TEST_CASE("experiment configs are validated") {
    ExperimentConfig cfg;
    cfg.command = "sumprod";
    CHECK_NOTHROW(validate(cfg));

    cfg.output_format = "xml";
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
    cfg.output_format = "csv";
    cfg.workers = 0;
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
    cfg.workers = 2;
    cfg.command.clear();
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
}

TEST_CASE("report records serialize with a fixed shape") {
    ReportRecord rec;
    rec.experiment = "ruzsa-sweep";
    rec.claim = "doubling-inequality";
    rec.inputs["trials"] = 10;
    rec.outputs["violations"] = 0;
    rec.wall_ms = 1.5;

    nlohmann::ordered_json j = to_json(rec);
    CHECK(j.contains("experiment"));
    CHECK(j["claim"] == "doubling-inequality");
    CHECK_FALSE(j.contains("verdict")); // measurements carry no verdict

    rec.verdict = true;
    j = to_json(rec);
    CHECK(j["verdict"] == true);

    // key order is pinned, so identical records give identical bytes
    const auto keys = [&] {
        std::vector<std::string> k;
        for (auto it = j.begin(); it != j.end(); ++it)
            k.push_back(it.key());
        return k;
    }();
    CHECK(keys == std::vector<std::string>{"experiment", "claim", "inputs", "outputs", "verdict",
                                           "wall_ms"});
    CHECK(to_json(rec).dump() == to_json(rec).dump());

    rec.claim = "not-a-registered-claim";
    CHECK_THROWS_AS(to_json(rec), std::invalid_argument);
}

TEST_CASE("claim registry is closed and queryable") {
    CHECK(known_claim("dot-product-bound"));
    CHECK(known_claim("class-number-formula"));
    CHECK_FALSE(known_claim("perpetual-motion"));
    CHECK(claim_registry().size() >= 15);
}

TEST_CASE("csv output quotes exactly the fields that need it") {
    const std::string out = to_csv({"a", "b"}, {{"plain", "with,comma"},
                                                {"with\"quote", "with\nnewline"}});
    CHECK(out == "a,b\nplain,\"with,comma\"\n\"with\"\"quote\",\"with\nnewline\"\n");
    CHECK_THROWS_AS(to_csv({"a"}, {{"x", "y"}}), std::invalid_argument);
}

TEST_CASE("acceptance filter selects criteria without running the rest") {
    const auto growth = acceptance_suite({.filter = "isogeny-size-growth"});
    REQUIRE(growth.size() == 1);
    CHECK(growth[0].number == 3);
    CHECK(growth[0].pass);
    CHECK(format_result_line(growth[0]).rfind("[PASS] 03-", 0) == 0);

    const auto cg = acceptance_suite({.filter = "class-groups"});
    REQUIRE(cg.size() == 2);
    CHECK(cg[0].number == 1);
    CHECK(cg[1].number == 2);

    const auto none = acceptance_suite({.filter = "no-such-tag"});
    CHECK(none.empty());
}

TEST_CASE("failure injection makes the class-number criterion fail") {
    const auto res =
        acceptance_suite({.filter = "class-number-oracle", .inject_failure = true});
    REQUIRE(res.size() == 1);
    CHECK_FALSE(res[0].pass);
    CHECK(format_result_line(res[0]).rfind("[FAIL] 01-", 0) == 0);

    const auto clean = acceptance_suite({.filter = "class-number-oracle"});
    REQUIRE(clean.size() == 1);
    CHECK(clean[0].pass);
}
