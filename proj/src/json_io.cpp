#include "seatmatch/json_io.hpp"

namespace seatmatch {

Json to_json(const Matching& f) {
    Json edges = Json::array();
    for (const auto& e : f.edges()) edges.push_back({e.u, e.w});
    return {{"v", f.order()}, {"edges", std::move(edges)}};
}

Json to_json(const Witness& w) {
    Json params = Json::object();
    for (const auto& [k, v] : w.params) params[k] = v;
    Json j = {{"condition", w.condition}, {"params", std::move(params)}};
    if (!w.detail.empty()) j["detail"] = w.detail;
    return j;
}

Json to_json(const Verdict& v) {
    Json j = {{"status", to_string(v.status)}, {"route", nullptr}, {"witness", nullptr}};
    if (v.is_feasible()) j["route"] = v.route;
    if (v.is_infeasible()) j["witness"] = to_json(v.witness);
    return j;
}

Json to_json(const SolveReport& r) {
    Json j = to_json(r.matching);
    j["route"] = r.route;
    j["detail"] = r.detail;
    j["verified"] = r.verified;
    return j;
}

Json to_json(const ConjectureReport& r) {
    Json ces = Json::array();
    for (const auto& c : r.counterexamples) {
        Json item = {{"list", c.list.to_string()},
                     {"oracle_feasible", c.oracle_feasible},
                     {"predicted_feasible", c.predicted_feasible},
                     {"nodes", c.nodes}};
        item["matching"] = c.matching ? to_json(*c.matching) : Json(nullptr);
        ces.push_back(std::move(item));
    }
    return {{"p", r.p}, {"lists_checked", r.lists_checked}, {"counterexamples", std::move(ces)}, {"agrees", r.agrees}};
}

Json to_json(const SweepRecord& r) {
    return {{"list", r.list.to_string()}, {"status", r.status}, {"nodes", r.nodes}, {"millis", r.millis}};
}

Json to_json(const SearchStats& s) {
    return {{"nodes_expanded", s.nodes_expanded},
            {"solutions_found", s.solutions_found},
            {"millis", std::chrono::duration<double, std::milli>(s.wall_time).count()}};
}

RawMatching raw_matching_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("v") || !j.contains("edges")) {
        throw InvalidArgument("matching JSON needs \"v\" and \"edges\"");
    }
    if (!j["v"].is_number_integer()) throw InvalidArgument("\"v\" must be an integer");
    if (!j["edges"].is_array()) throw InvalidArgument("\"edges\" must be an array");
    RawMatching out;
    out.v = j["v"].get<int>();
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
            throw InvalidArgument("edge " + e.dump() + " is not a pair of integers");
        }
        out.edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return out;
}

Matching matching_from_json(const Json& j) {
    RawMatching raw = raw_matching_from_json(j);
    return Matching(raw.v, std::move(raw.edges));
}

}  // namespace seatmatch
