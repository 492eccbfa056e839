#include "twoclub/report.hpp"

#include <algorithm>
#include <chrono>

namespace twoclub {

nlohmann::json make_report(const std::string &command, const nlohmann::json &rows,
                           const std::vector<VertexList> &certificates, const Stats &stats, bool timing) {
    nlohmann::json certs = nlohmann::json::array();
    for (VertexList cert : certificates) {
        std::sort(cert.begin(), cert.end());
        certs.push_back(cert);
    }
    const auto elapsed_ms =
        timing ? std::chrono::duration<double, std::milli>(stats.elapsed).count() : 0.0;
    return {
        {"command", command},
        {"rows", rows.is_null() ? nlohmann::json::array() : rows},
        {"certificates", certs},
        {"stats", {{"nodes_explored", stats.nodes_explored}, {"elapsed_ms", elapsed_ms}}},
    };
}

nlohmann::json to_json(const EquivalenceRow &row) {
    return {
        {"h_id", row.h_id},
        {"n", row.n},
        {"k", row.k},
        {"omega", row.omega},
        {"target", row.target},
        {"max_2club", row.max_2club},
        {"clique_yes", row.clique_yes},
        {"club_yes", row.club_yes},
        {"agree", row.agree},
        {"formula_max", row.formula_max},
        {"consistent", row.consistent},
    };
}

nlohmann::json to_json(const VerifyReport &report) {
    return {
        {"n", report.n},
        {"k", report.k},
        {"omega", report.omega},
        {"clique", report.clique},
        {"target", report.target},
        {"clique_yes", report.clique_yes},
        {"club_yes", report.club_yes},
        {"forward_ok", report.forward_ok},
        {"forward_size", report.forward_set.size()},
        {"certificate_ok", report.certificate_ok},
        {"agree", report.agree},
    };
}

nlohmann::json to_json(const OracleCheckReport &report) {
    return {
        {"graphs", report.graphs},
        {"comparisons", report.comparisons},
        {"mismatches", report.mismatches},
        {"failures", report.failures},
    };
}

} // namespace twoclub
