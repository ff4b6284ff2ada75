#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "errors.hpp"
#include "graph.hpp"
#include "oracle.hpp"
#include "packing.hpp"
#include "verifier.hpp"

namespace stpack {

// Packing record:
//   {"graph": <edge-list file or descriptor>, "method": "...", "bound": <int|null>,
//    "trees": [[[a,b], ...], ...], "verified": true|false}

inline nlohmann::json edges_to_json(const EdgeSet &edges) {
    auto out = nlohmann::json::array();
    for (const auto &e : edges)
        out.push_back({e.a, e.b});
    return out;
}

inline nlohmann::json packing_to_json(const TreePacking &packing, const std::string &graph_ref,
                                      std::optional<std::size_t> bound, bool verified) {
    nlohmann::json out;
    out["graph"] = graph_ref;
    out["method"] = to_string(packing.method);
    out["bound"] = bound ? nlohmann::json(*bound) : nlohmann::json(nullptr);
    auto trees = nlohmann::json::array();
    for (const auto &t : packing.trees)
        trees.push_back(edges_to_json(t));
    out["trees"] = std::move(trees);
    out["verified"] = verified;
    return out;
}

/// Reads the trees of a packing record against `host`. Endpoint order inside
/// a pair is not significant.
inline TreePacking packing_from_json(const nlohmann::json &record, const Graph &host) {
    if (!record.is_object() || !record.contains("trees") || !record["trees"].is_array())
        throw parameter_error("packing record needs a 'trees' array");
    TreePacking packing{host, {}, PackingMethod::user};
    if (record.contains("method") && record["method"].is_string())
        packing.method = parse_packing_method(record["method"].get<std::string>());
    for (const auto &tree : record["trees"]) {
        if (!tree.is_array())
            throw parameter_error("each tree must be an array of [a,b] pairs");
        std::vector<Edge> edges;
        for (const auto &pair : tree) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
                !pair[1].is_number_unsigned())
                throw parameter_error("malformed edge " + pair.dump());
            edges.emplace_back(pair[0].get<Vertex>(), pair[1].get<Vertex>());
        }
        packing.trees.emplace_back(std::move(edges));
    }
    return packing;
}

/// One key per line; nested lists of edge lists get one list per line.
inline std::string dump_record(const nlohmann::json &record) {
    if (!record.is_object())
        return record.dump() + "\n";
    auto nested = [](const nlohmann::json &v) {
        return v.is_array() && !v.empty() && v.front().is_array() && !v.front().empty() && v.front().front().is_array();
    };
    std::string out = "{";
    bool first = true;
    for (auto it = record.begin(); it != record.end(); ++it) {
        out += first ? "\n " : ",\n ";
        first = false;
        out += nlohmann::json(it.key()).dump() + ": ";
        if (nested(it.value())) {
            out += "[";
            for (std::size_t i = 0; i < it.value().size(); ++i)
                out += (i ? ",\n  " : "\n  ") + it.value()[i].dump();
            out += "\n ]";
        } else {
            out += it.value().dump();
        }
    }
    return out + "\n}\n";
}

inline nlohmann::json certificate_to_json(const TutteCertificate &c) {
    return {{"partition", c.partition}, {"crossing", c.crossing_count}, {"bound", c.bound}};
}

inline nlohmann::json report_to_json(const VerificationReport &report) {
    auto checks = nlohmann::json::array();
    for (const auto &c : report.checks) {
        nlohmann::json item{{"name", c.name}, {"passed", c.passed}};
        if (!c.passed)
            item["witness"] = c.witness;
        checks.push_back(std::move(item));
    }
    return {{"subject", report.subject}, {"checks", std::move(checks)}, {"overall", report.ok()}};
}

} // namespace stpack
