#pragma once

// Test-only reference implementations, written without the library's
// search or length code.

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "seatmatch/core.hpp"

namespace testsupport {

inline int circ(int v, int u, int w) {
    int d = u > w ? u - w : w - u;
    return std::min(d, v - d);
}

// Sorted circular lengths of an edge list.
inline std::vector<int> lengths_of(int v, const std::vector<seatmatch::Edge>& edges) {
    std::vector<int> out;
    for (const auto& e : edges) out.push_back(circ(v, e.u, e.w));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<int> lengths_of(const seatmatch::Matching& f) { return lengths_of(f.order(), f.edges()); }

// Visits every perfect matching of K_v (v even) by pairing the first free
// vertex with each later free vertex.
inline void all_perfect_matchings(int v, const std::function<void(const std::vector<seatmatch::Edge>&)>& visit) {
    std::vector<char> used(static_cast<std::size_t>(v), 0);
    std::vector<seatmatch::Edge> cur;
    std::function<void()> rec = [&] {
        int u = 0;
        while (u < v && used[u]) ++u;
        if (u == v) {
            visit(cur);
            return;
        }
        used[u] = 1;
        for (int w = u + 1; w < v; ++w) {
            if (used[w]) continue;
            used[w] = 1;
            cur.push_back({u, w});
            rec();
            cur.pop_back();
            used[w] = 0;
        }
        used[u] = 0;
    };
    rec();
}

// Map from sorted length vector to the number of perfect matchings of K_v
// realizing it.
inline std::map<std::vector<int>, long long> brute_force_census(int v) {
    std::map<std::vector<int>, long long> census;
    all_perfect_matchings(v, [&](const auto& edges) { ++census[lengths_of(v, edges)]; });
    return census;
}

}  // namespace testsupport
