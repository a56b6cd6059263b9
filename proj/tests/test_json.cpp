#include <doctest.h>

#include <json.hpp>

#include "perank/json_io.hpp"
#include "perank/regular.hpp"

using namespace perank;
using nlohmann::json;

TEST_SUITE("json") {

TEST_CASE("dump is key-sorted with a trailing newline") {
    const std::string text = dump_json(json{{"zeta", 1}, {"alpha", 2}});
    CHECK(text == "{\n  \"alpha\": 2,\n  \"zeta\": 1\n}\n");
}

TEST_CASE("kernel json shape") {
    const json j = kernel_json(kernel(PeriodicSequence({0, 1, 1}), 2));
    CHECK(j["paper_anchor"] == "k-kernel-closure");
    CHECK(j["ell"] == 3);
    CHECK(j["k"] == 2);
    CHECK(j["size"] == 3);
    CHECK(j["elements"].size() == 3);
    CHECK(j["elements"][0].contains("c"));
    CHECK(j["elements"][0].contains("r"));
    CHECK(j["elements"][0].contains("values"));
    CHECK(j["transitions"].size() == 3);
}

TEST_CASE("dfao json shape") {
    const json j = dfao_json(build_dfao(PeriodicSequence({0, 1, 1}), 2));
    CHECK(j["paper_anchor"] == "minimal-dfao-lsd-first");
    CHECK(j["digit_order"] == "lsd-first");
    CHECK(j["state_count"] == 3);
    CHECK(j["states"].size() == 3);
    CHECK(j["states"][0]["next"].size() == 2);
}

TEST_CASE("report json carries witnesses only on request") {
    const AutomaticMuggleReport r = muggle_report_automatic(3, 7);
    const json with = automatic_report_json(r, "automatic", true);
    const json without = automatic_report_json(r, "automatic", false);
    CHECK(with["paper_anchor"] == "automatic-coprime-muggle-characterization");
    CHECK(with["muggles"] == json::array({7, 14, 21, 42}));
    CHECK(with["witnesses"]["42"].is_array());
    CHECK_FALSE(without.contains("witnesses"));
}

TEST_CASE("diff json exposes the documented fields") {
    const json j = diff_report_json(diff_report(Framework::cr, 0, 2, 2));
    for (const char* key : {"framework", "k", "ell", "alphabet_size", "observed_ranks", "predicted_muggles",
                            "soundness_violations", "unrealized_muggles", "witness_closures", "pass"})
        CHECK(j.contains(key));
    CHECK(j["framework"] == "cr");
    CHECK(j["k"].is_null());
    CHECK(j["observed_ranks"]["2"] == 2);
    CHECK(j["witness_closures"]["1"] == json::array({1, -1}));
    CHECK(j["pass"] == true);
}

TEST_CASE("serialization is byte-identical across calls") {
    const CrMuggleReport r = muggle_report_cr(10);
    CHECK(dump_json(cr_report_json(r, true)) == dump_json(cr_report_json(muggle_report_cr(10), true)));
    const Dfao d = build_dfao(PeriodicSequence({0, 1, 2, 3, 4, 5}), 2);
    CHECK(dump_json(dfao_json(d)) == dump_json(dfao_json(d)));
}

}  // TEST_SUITE
