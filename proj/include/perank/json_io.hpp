#pragma once

// JSON views of the library's reports. Keys are emitted sorted and the
// serialization is deterministic, so identical inputs give byte-identical
// output. Every report carries a `paper_anchor` naming the
// characterization it instantiates.

#include <cstdint>
#include <string>

#include <json.hpp>

#include "perank/automatic.hpp"
#include "perank/oracle.hpp"
#include "perank/recursive.hpp"

namespace perank {

nlohmann::json period_json(const PeriodicSequence& s);
nlohmann::json kernel_json(const Kernel& k);
nlohmann::json dfao_json(const Dfao& d);

/// framework is "automatic" or "regular"; empirical reports exist for
/// both and reuse the same struct.
nlohmann::json automatic_report_json(const AutomaticMuggleReport& r, const std::string& framework,
                                     bool include_witnesses);
nlohmann::json cr_report_json(const CrMuggleReport& r, bool include_witnesses);
/// The regular report is the constant-recursive one re-verified for a
/// base; the JSON records that base.
nlohmann::json regular_report_json(const CrMuggleReport& r, std::int64_t k, bool include_witnesses);
nlohmann::json diff_report_json(const DiffReport& r);

/// 2-space indent, sorted keys, trailing newline.
std::string dump_json(const nlohmann::json& j);

}  // namespace perank
