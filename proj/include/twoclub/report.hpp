#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "twoclub/harness.hpp"

namespace twoclub {

/// Top-level report: { "command", "rows", "certificates", "stats" }.
/// With timing disabled elapsed_ms is written as 0 so that reports are
/// byte-identical across runs.
nlohmann::json make_report(const std::string &command, const nlohmann::json &rows,
                           const std::vector<VertexList> &certificates, const Stats &stats, bool timing = true);

nlohmann::json to_json(const EquivalenceRow &row);
nlohmann::json to_json(const VerifyReport &report);
nlohmann::json to_json(const OracleCheckReport &report);

} // namespace twoclub
