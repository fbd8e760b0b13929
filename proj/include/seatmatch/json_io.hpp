#pragma once

// JSON forms of the library's values.

#include <json.hpp>

#include "seatmatch/constructors.hpp"
#include "seatmatch/core.hpp"
#include "seatmatch/feasibility.hpp"
#include "seatmatch/oracle.hpp"

namespace seatmatch {

using Json = nlohmann::json;

// {"v": 4, "edges": [[0,2],[1,3]]}
Json to_json(const Matching& f);
Json to_json(const Witness& w);
// {"status": "...", "route": ..., "witness": ...}
Json to_json(const Verdict& v);
// Matching fields plus "route", "detail" and "verified".
Json to_json(const SolveReport& r);
Json to_json(const ConjectureReport& r);
Json to_json(const SweepRecord& r);
Json to_json(const SearchStats& s);

// Edges exactly as written, for verify_realizes to judge. Throws
// InvalidArgument if the document does not have the matching shape.
struct RawMatching {
    int v = 0;
    std::vector<Edge> edges;
};
RawMatching raw_matching_from_json(const Json& j);

// Validated matching; throws InvalidArgument or InvalidEdge.
Matching matching_from_json(const Json& j);

}  // namespace seatmatch
