#pragma once

#include <string>
#include <vector>

#include "seatmatch/core.hpp"

namespace seatmatch::detail {

// Accumulates edges of K_v with vertices reduced modulo v.
class EdgeBuilder {
public:
    explicit EdgeBuilder(int v) : v_(v) {}

    void add(long long u, long long w) {
        edges_.push_back({static_cast<int>(mod(u, v_)), static_cast<int>(mod(w, v_))});
    }
    void add(const Matching& m, long long shift = 0) {
        for (const auto& e : m.edges()) add(e.u + shift, e.w + shift);
    }
    // Consecutive pairs {lo, lo+1}, {lo+2, lo+3}, ... over [lo, hi].
    void add_unit_pairs(long long lo, long long hi) {
        if (hi < lo) return;
        if ((hi - lo + 1) % 2 != 0) {
            throw InternalError("odd interval [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
        }
        for (long long u = lo; u < hi; u += 2) add(u, u + 1);
    }

    int order() const noexcept { return v_; }
    std::size_t size() const noexcept { return edges_.size(); }
    Matching build() const { return Matching(v_, edges_); }

private:
    int v_;
    std::vector<Edge> edges_;
};

// Fail-closed exit of every constructor.
inline Matching checked(Matching f, const LengthList& target, const std::string& what) {
    if (auto r = verify_realizes(f, target); !r) {
        throw InternalError(what + " produced an invalid matching for {" + target.to_string() + "}: " + r.diagnostic);
    }
    return f;
}

// Builds then verifies; a repeated endpoint surfaces as InternalError too.
inline Matching checked(const EdgeBuilder& b, const LengthList& target, const std::string& what) {
    Matching f;
    try {
        f = b.build();
    } catch (const Error& e) {
        throw InternalError(what + " produced overlapping edges for {" + target.to_string() + "}: " + e.what());
    }
    return checked(std::move(f), target, what);
}

inline LengthList two_list(int x, int cx, int y, int cy) {
    if (x == y) return LengthList::from_counts({{x, cx + cy}});
    return LengthList::from_counts({{x, cx}, {y, cy}});
}

}  // namespace seatmatch::detail
