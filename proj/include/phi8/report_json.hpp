// JSON documents for the CLI reports.
#pragma once

#include "phi8/identities.hpp"
#include "phi8/projection.hpp"
#include "phi8/roots.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace phi8::json {

using Json = nlohmann::ordered_json;

inline Json to_json(const IdentityReport& r) {
    Json j;
    j["name"] = r.name;
    j["holds"] = r.holds;
    if (r.witness)
        j["witness"] = {{"row", r.witness->row},
                        {"col", r.witness->col},
                        {"expected", r.witness->expected},
                        {"actual", r.witness->actual}};
    else
        j["witness"] = nullptr;
    j["detail"] = r.detail;
    return j;
}

inline Json report_list(const std::string& command, const std::vector<IdentityReport>& reports) {
    Json j;
    j["command"] = command;
    j["all_hold"] = all_hold(reports);
    j["reports"] = Json::array();
    for (const auto& r : reports) j["reports"].push_back(to_json(r));
    return j;
}

inline Json powers_json(const PowerPattern& p) {
    Json j;
    j["command"] = "powers";
    j["n"] = p.n;
    j["sum_scalar"] = to_sqrt5_string(p.sum_scalar);
    j["diff_scalar"] = to_sqrt5_string(p.diff_scalar);
    j["sum_matrix"] = "I";
    j["diff_matrix"] = "J";
    j["parity_pattern"] = p.parity_pattern;
    j["report"] = to_json(p.report);
    return j;
}

inline Json roots_json(const std::string& matrix, const Enumeration& en) {
    Json j;
    j["command"] = "roots";
    j["matrix"] = matrix;
    j["mode"] = to_string(en.rule.mode);
    j["max_height"] = en.rule.max_height;
    j["dedup"] = en.rule.dedup;
    j["count"] = en.roots.size();
    j["highest_root_height"] = en.max_height();
    const auto counts = en.counts_by_height();
    j["counts_by_height"] = counts;
    std::vector<std::size_t> cumulative;
    std::size_t acc = 0;
    for (auto c : counts) cumulative.push_back(acc += c);
    j["cumulative"] = cumulative;
    j["stats"] = {{"accepted_paths", en.stats.accepted_paths},
                  {"distinct_roots", en.stats.distinct_roots},
                  {"duplicates_merged", en.stats.duplicates_merged},
                  {"distinct_weights", en.stats.distinct_weights}};
    const auto names = node_names(en.roots);
    j["roots"] = Json::array();
    for (std::size_t i = 0; i < en.roots.size(); ++i) {
        const auto& r = en.roots[i];
        Json w = Json::array();
        for (const auto& x : r.weight) w.push_back(to_sqrt5_string(x));
        Json parents = Json::array();
        for (const auto& [p, s] : r.parents) parents.push_back(names[p] + "+e" + std::to_string(s + 1));
        j["roots"].push_back({{"name", names[i]}, {"height", r.height}, {"coeffs", r.coeffs}, {"weight", w},
                              {"parents", parents}});
    }
    return j;
}

inline Json hull_report_json(const HullReport& r) {
    Json layers = Json::array();
    for (const auto& l : r.layers)
        layers.push_back({{"vertex_count", l.vertex_count},
                          {"multiplicity", l.multiplicity},
                          {"classification", l.classification},
                          {"edge_ratio", l.edge_ratio}});
    return {{"dims", r.dims}, {"distinct_points", r.distinct_points}, {"signature", r.signature}, {"layers", layers}};
}

inline Json project_json(const VertexSet& vs, VertexBasis basis, const std::vector<HullReport>& reports,
                         const std::vector<SignatureGroup>& groups) {
    Json j;
    j["command"] = "project";
    j["basis"] = to_string(basis);
    j["provenance"] = vs.provenance;
    j["vertex_count"] = vs.exact.size();
    j["reports"] = Json::array();
    for (const auto& r : reports) j["reports"].push_back(hull_report_json(r));
    j["groups"] = Json::array();
    for (const auto& g : groups) j["groups"].push_back({{"signature", g.signature}, {"members", g.members}});
    return j;
}

}  // namespace phi8::json
