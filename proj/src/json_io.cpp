#include "perank/json_io.hpp"

namespace perank {

using nlohmann::json;

json period_json(const PeriodicSequence& s) { return json(s.period()); }

json kernel_json(const Kernel& k) {
    json elements = json::array();
    for (const KernelElement& e : k.elements) elements.push_back(json{{"c", e.c}, {"r", e.r}, {"values", e.values}});
    return json{
        {"paper_anchor", "k-kernel-closure"},
        {"base_period", k.base.period()},
        {"ell", k.base.ell()},
        {"k", k.k},
        {"size", k.elements.size()},
        {"initial", k.initial},
        {"elements", elements},
        {"transitions", k.transitions},
    };
}

json dfao_json(const Dfao& d) {
    json states = json::array();
    for (std::size_t i = 0; i < d.outputs.size(); ++i)
        states.push_back(json{{"id", i}, {"output", d.outputs[i]}, {"next", d.transitions[i]}});
    return json{
        {"paper_anchor", "minimal-dfao-lsd-first"},
        {"base_k", d.base_k},
        {"digit_order", "lsd-first"},
        {"state_count", d.outputs.size()},
        {"initial", d.initial},
        {"states", states},
    };
}

json automatic_report_json(const AutomaticMuggleReport& r, const std::string& framework,
                           bool include_witnesses) {
    json j{
        {"paper_anchor", r.empirical ? "empirical-rank-enumeration" : "automatic-coprime-muggle-characterization"},
        {"framework", framework},
        {"k", r.k},
        {"ell", r.ell},
        {"coprime", r.coprime},
        {"empirical", r.empirical},
        {"range", {r.range_lo, r.range_hi}},
        {"muggles", r.muggles},
        {"magics", r.magics},
    };
    if (include_witnesses) {
        json w = json::object();
        for (const auto& [value, seq] : r.witnesses) w[std::to_string(value)] = seq.period();
        j["witnesses"] = w;
    }
    return j;
}

json cr_report_json(const CrMuggleReport& r, bool include_witnesses) {
    json j{
        {"paper_anchor", "constant-recursive-muggle-characterization"},
        {"framework", "cr"},
        {"ell", r.ell},
        {"range", {r.range_lo, r.range_hi}},
        {"muggles", r.muggles},
        {"magics", r.magics},
    };
    if (include_witnesses) {
        json w = json::object();
        for (const auto& [value, entry] : r.witnesses)
            w[std::to_string(value)] = json{{"divisors", entry.first}, {"period", entry.second.period()}};
        j["witnesses"] = w;
    }
    return j;
}

json regular_report_json(const CrMuggleReport& r, std::int64_t k, bool include_witnesses) {
    json j = cr_report_json(r, include_witnesses);
    j["paper_anchor"] = "regular-coprime-muggle-characterization";
    j["framework"] = "regular";
    j["k"] = k;
    return j;
}

json diff_report_json(const DiffReport& r) {
    json observed = json::object();
    for (const auto& [rank_value, count] : r.observed_ranks) observed[std::to_string(rank_value)] = count;
    json closures = json::object();
    for (const auto& [value, seq] : r.witness_closures) closures[std::to_string(value)] = seq.period();
    json j{
        {"paper_anchor", "soundness-and-witness-verification"},
        {"framework", framework_name(r.framework)},
        {"ell", r.ell},
        {"alphabet_size", r.alphabet_size},
        {"has_prediction", r.has_prediction},
        {"observed_ranks", observed},
        {"predicted_muggles", r.predicted_muggles},
        {"soundness_violations", r.soundness_violations},
        {"unrealized_muggles", r.unrealized_muggles},
        {"witness_closures", closures},
        {"pass", r.soundness_violations.empty()},
    };
    if (r.framework == Framework::cr)
        j["k"] = nullptr;
    else
        j["k"] = r.k;
    return j;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace perank
