#include "seatmatch/transforms.hpp"

namespace seatmatch {

Matching translate_mod(const Matching& f, long long k) {
    const int v = f.order();
    std::vector<Edge> out;
    out.reserve(f.size());
    for (const auto& e : f.edges()) {
        out.push_back({static_cast<int>(mod(e.u + k, v)), static_cast<int>(mod(e.w + k, v))});
    }
    return Matching(v, std::move(out));
}

Matching translate_into(const Matching& f, int k, int target_v) {
    std::vector<Edge> out;
    out.reserve(f.size());
    for (const auto& e : f.edges()) {
        long long u = static_cast<long long>(e.u) + k;
        long long w = static_cast<long long>(e.w) + k;
        if (u < 0 || w < 0 || u >= target_v || w >= target_v) {
            throw InvalidEdge("shift by " + std::to_string(k) + " moves edge {" + std::to_string(e.u) + "," +
                              std::to_string(e.w) + "} outside K_" + std::to_string(target_v));
        }
        out.push_back({static_cast<int>(u), static_cast<int>(w)});
    }
    return Matching(target_v, std::move(out));
}

Matching concat(const Matching& f1, const Matching& f2) {
    return concat(std::vector<Matching>{f1, f2});
}

Matching concat(const std::vector<Matching>& parts) {
    int total = 0;
    for (const auto& p : parts) total += p.order();
    std::vector<Edge> out;
    int offset = 0;
    for (const auto& p : parts) {
        for (const auto& e : p.edges()) out.push_back({e.u + offset, e.w + offset});
        offset += p.order();
    }
    return Matching(total, std::move(out));
}

Matching scale_by_unit(const Matching& f, long long x) {
    const int v = f.order();
    if (v > 0 && gcd(mod(x, v), v) != 1) {
        throw InvalidArgument("not a unit: gcd(" + std::to_string(x) + ", " + std::to_string(v) + ") != 1");
    }
    std::vector<Edge> out;
    out.reserve(f.size());
    for (const auto& e : f.edges()) {
        out.push_back({static_cast<int>(mod(x * e.u, v)), static_cast<int>(mod(x * e.w, v))});
    }
    return Matching(v, std::move(out));
}

Matching lift(const std::vector<Matching>& parts) {
    if (parts.empty()) throw InvalidArgument("lift needs at least one part");
    const int v = parts.front().order();
    const int c = static_cast<int>(parts.size());
    std::vector<Edge> out;
    for (int i = 0; i < c; ++i) {
        if (parts[i].order() != v) {
            throw InvalidArgument("lift parts have unequal orders " + std::to_string(v) + " and " +
                                  std::to_string(parts[i].order()));
        }
        for (const auto& e : parts[i].edges()) out.push_back({c * e.u + i, c * e.w + i});
    }
    return Matching(v * c, std::move(out));
}

Matching lift(const ResidueDecomposition& parts) { return lift(parts.parts); }

ResidueDecomposition project(const Matching& f, int c) {
    const int v = f.order();
    if (c < 1 || v % c != 0 || (v / c) % 2 != 0) {
        throw InvalidArgument("cannot project K_" + std::to_string(v) + " by " + std::to_string(c));
    }
    std::vector<std::vector<Edge>> classes(static_cast<std::size_t>(c));
    for (const auto& e : f.edges()) {
        int len = edge_length(v, e.u, e.w);
        if (len % c != 0) {
            throw NotDivisible(e, len, "edge {" + std::to_string(e.u) + "," + std::to_string(e.w) +
                                           "} has length " + std::to_string(len) + ", not a multiple of " +
                                           std::to_string(c));
        }
        // c | v and c | len give u ≡ w (mod c)
        int i = e.u % c;
        classes[i].push_back({(e.u - i) / c, (e.w - i) / c});
    }
    ResidueDecomposition out{c, {}};
    for (auto& cls : classes) out.parts.emplace_back(v / c, std::move(cls));
    return out;
}

}  // namespace seatmatch
