#include "seatmatch/core.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace seatmatch {

long long gcd(long long a, long long b) { return std::gcd(a, b); }

long long mod_inverse(long long a, long long m) {
    // extended Euclid on (a mod m, m)
    long long old_r = mod(a, m), r = m;
    long long old_s = 1, s = 0;
    while (r != 0) {
        long long q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
    }
    if (old_r != 1) {
        throw InvalidArgument(std::to_string(a) + " is not a unit modulo " + std::to_string(m));
    }
    return mod(old_s, m);
}

Order Order::from_vertices(int v) {
    if (v < 2 || v % 2 != 0) {
        throw InvalidArgument("order must be a positive even integer, got " + std::to_string(v));
    }
    return Order(v);
}

// ---------------------------------------------------------------------------

LengthList LengthList::from_counts(const std::map<int, int>& counts) {
    long long total = 0;
    for (auto [len, m] : counts) {
        if (m < 0) throw InvalidArgument("negative multiplicity for length " + std::to_string(len));
        total += m;
    }
    LengthList l;
    l.size_ = static_cast<int>(total);
    l.mult_.assign(static_cast<std::size_t>(l.size_) + 1, 0);
    for (auto [len, m] : counts) {
        if (m == 0) continue;
        if (len < 1 || len > l.size_) {
            throw InvalidArgument("length " + std::to_string(len) + " outside [1, " +
                                  std::to_string(l.size_) + "]");
        }
        l.mult_[len] += m;
    }
    return l;
}

LengthList LengthList::from_lengths(std::span<const int> lengths) {
    std::map<int, int> counts;
    for (int x : lengths) ++counts[x];
    return from_counts(counts);
}

LengthList LengthList::parse(std::string_view text) {
    std::string compact;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    }
    if (compact.empty()) throw InvalidArgument("empty length list");

    auto parse_int = [](std::string_view tok, std::string_view term) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
            throw InvalidArgument("bad length-list term '" + std::string(term) + "'");
        }
        return value;
    };

    std::map<int, int> counts;
    std::string_view rest = compact;
    while (true) {
        auto comma = rest.find(',');
        std::string_view term = rest.substr(0, comma);
        auto caret = term.find('^');
        int len = parse_int(term.substr(0, caret), term);
        int mult = caret == std::string_view::npos ? 1 : parse_int(term.substr(caret + 1), term);
        if (len < 1 || mult < 1) {
            throw InvalidArgument("bad length-list term '" + std::string(term) + "'");
        }
        counts[len] += mult;
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return from_counts(counts);
}

std::vector<int> LengthList::support() const {
    std::vector<int> s;
    for (int len = 1; len < static_cast<int>(mult_.size()); ++len) {
        if (mult_[len] > 0) s.push_back(len);
    }
    return s;
}

int LengthList::max_length() const {
    for (int len = static_cast<int>(mult_.size()) - 1; len >= 1; --len) {
        if (mult_[len] > 0) return len;
    }
    return 0;
}

bool LengthList::all_odd() const {
    for (int len = 2; len < static_cast<int>(mult_.size()); len += 2) {
        if (mult_[len] > 0) return false;
    }
    return true;
}

std::vector<int> LengthList::expanded() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size_));
    for (int len = 1; len < static_cast<int>(mult_.size()); ++len) {
        out.insert(out.end(), static_cast<std::size_t>(mult_[len]), len);
    }
    return out;
}

std::string LengthList::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int len : support()) {
        if (!first) os << ',';
        first = false;
        os << len;
        if (mult_[len] != 1) os << '^' << mult_[len];
    }
    return os.str();
}

// ---------------------------------------------------------------------------

Matching::Matching(int v, std::vector<Edge> edges) : v_(v), edges_(std::move(edges)) {
    if (v < 0) throw InvalidArgument("negative order");
    std::vector<char> seen(static_cast<std::size_t>(v), 0);
    for (auto& e : edges_) {
        if (e.u == e.w) throw InvalidEdge("loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.u >= v || e.w < 0 || e.w >= v) {
            throw InvalidEdge("edge {" + std::to_string(e.u) + "," + std::to_string(e.w) +
                              "} outside [0, " + std::to_string(v - 1) + "]");
        }
        if (e.u > e.w) std::swap(e.u, e.w);
        for (int x : {e.u, e.w}) {
            if (seen[x]) throw InvalidArgument("repeated endpoint " + std::to_string(x));
            seen[x] = 1;
        }
    }
    std::sort(edges_.begin(), edges_.end());
}

Matching::Matching(int v, std::initializer_list<std::pair<int, int>> edges)
    : Matching(v, [&] {
          std::vector<Edge> es;
          for (auto [u, w] : edges) es.push_back({u, w});
          return es;
      }()) {}

int edge_length(int v, int u, int w) {
    if (u == w) throw InvalidEdge("edge {" + std::to_string(u) + "," + std::to_string(w) + "} is a loop");
    if (u < 0 || u >= v || w < 0 || w >= v) {
        throw InvalidEdge("vertex outside [0, " + std::to_string(v - 1) + "]");
    }
    int d = u > w ? u - w : w - u;
    return std::min(d, v - d);
}

int reduced_length(int u, int w) {
    if (u == w) throw InvalidEdge("edge {" + std::to_string(u) + "," + std::to_string(w) + "} is a loop");
    return u > w ? u - w : w - u;
}

LengthList length_list(const Matching& f) {
    if (!f.is_perfect()) {
        throw InvalidArgument("matching with " + std::to_string(f.size()) + " edges is not perfect in K_" +
                              std::to_string(f.order()));
    }
    std::map<int, int> counts;
    for (const auto& e : f.edges()) ++counts[edge_length(f.order(), e.u, e.w)];
    return LengthList::from_counts(counts);
}

std::vector<int> reduced_length_list(const Matching& f) {
    std::vector<int> out;
    out.reserve(f.size());
    for (const auto& e : f.edges()) out.push_back(reduced_length(e.u, e.w));
    std::sort(out.begin(), out.end());
    return out;
}

Verification verify_realizes(int v, std::span<const Edge> edges, const LengthList& target) {
    auto fail = [](std::string msg) { return Verification{false, std::move(msg)}; };
    if (v != 2 * target.size()) {
        return fail("order mismatch: K_" + std::to_string(v) + " but list has " +
                    std::to_string(target.size()) + " lengths");
    }
    std::vector<char> seen(static_cast<std::size_t>(v), 0);
    std::map<int, int> counts;
    for (const auto& e : edges) {
        if (e.u == e.w) return fail("loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.u >= v || e.w < 0 || e.w >= v) {
            return fail("vertex out of range in edge {" + std::to_string(e.u) + "," + std::to_string(e.w) + "}");
        }
        for (int x : {e.u, e.w}) {
            if (seen[x]) return fail("repeated endpoint " + std::to_string(x));
            seen[x] = 1;
        }
        ++counts[edge_length(v, e.u, e.w)];
    }
    if (2 * edges.size() != static_cast<std::size_t>(v)) {
        return fail("not perfect: " + std::to_string(edges.size()) + " edges in K_" + std::to_string(v));
    }
    if (LengthList::from_counts(counts) != target) return fail("length multiset mismatch");
    return {true, {}};
}

Verification verify_realizes(const Matching& f, const LengthList& target) {
    return verify_realizes(f.order(), f.edges(), target);
}

}  // namespace seatmatch
