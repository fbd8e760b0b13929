#include "seatmatch/skolem.hpp"

#include <utility>

namespace seatmatch {

bool SkolemSequence::is_valid(const std::vector<int>& seq) {
    if (seq.size() % 2 != 0) return false;
    const int n = static_cast<int>(seq.size() / 2);
    std::vector<int> first(static_cast<std::size_t>(n) + 1, -1), seen(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < 2 * n; ++i) {
        int k = seq[i];
        if (k < 1 || k > n) return false;
        if (++seen[k] == 1) {
            first[k] = i;
        } else if (seen[k] > 2 || i - first[k] != k) {
            return false;
        }
    }
    return true;
}

SkolemSequence::SkolemSequence(std::vector<int> seq) : seq_(std::move(seq)) {
    if (!is_valid(seq_)) throw InvalidArgument("not a Skolem sequence");
}

Matching SkolemSequence::to_matching() const {
    const int n = order();
    std::vector<int> first(static_cast<std::size_t>(n) + 1, -1);
    std::vector<Edge> edges;
    for (int i = 0; i < 2 * n; ++i) {
        int k = seq_[i];
        if (first[k] < 0) {
            first[k] = i;
        } else {
            edges.push_back({first[k], i});
        }
    }
    return Matching(2 * n, std::move(edges));
}

namespace {

// Pairs (p, p + k) on positions 1..2n.
using PairTable = std::vector<std::pair<int, int>>;

PairTable pairs_order_4s(int s) {
    PairTable p;
    for (int r = 1; r <= 2 * s; ++r) p.emplace_back(4 * s + r - 1, 8 * s - r + 1);
    for (int r = 1; r <= s - 2; ++r) p.emplace_back(r, 4 * s - r - 1);
    for (int r = 1; r <= s - 2; ++r) p.emplace_back(s + r + 1, 3 * s - r);
    p.emplace_back(s - 1, 3 * s);
    p.emplace_back(s, s + 1);
    p.emplace_back(2 * s, 4 * s - 1);
    p.emplace_back(2 * s + 1, 6 * s);
    return p;
}

PairTable pairs_order_4s1(int s) {
    PairTable p;
    for (int r = 1; r <= 2 * s; ++r) p.emplace_back(4 * s + r + 1, 8 * s - r + 3);
    p.emplace_back(2 * s + 1, 6 * s + 2);
    for (int r = 1; r <= s - 1; ++r) p.emplace_back(r, 4 * s - r + 1);
    p.emplace_back(s, 3 * s + 1);
    p.emplace_back(s + 1, s + 2);
    for (int r = 1; r <= s - 2; ++r) p.emplace_back(s + 2 + r, 3 * s + 1 - r);
    p.emplace_back(2 * s + 2, 4 * s + 1);
    return p;
}

bool search(std::vector<int>& seq, int k) {
    if (k == 0) return true;
    const int len = static_cast<int>(seq.size());
    for (int i = 0; i + k < len; ++i) {
        if (seq[i] == 0 && seq[i + k] == 0) {
            seq[i] = seq[i + k] = k;
            if (search(seq, k - 1)) return true;
            seq[i] = seq[i + k] = 0;
        }
    }
    return false;
}

}  // namespace

SkolemSequence skolem_sequence(int n) {
    if (n < 1) throw InvalidArgument("Skolem order must be positive");
    if (n % 4 == 2 || n % 4 == 3) {
        throw Infeasible("even-count", "no Skolem sequence of order " + std::to_string(n) + " (n ≡ 2,3 mod 4)");
    }
    switch (n) {
        case 1: return SkolemSequence({1, 1});
        case 4: return SkolemSequence({1, 1, 4, 2, 3, 2, 4, 3});
        case 5: return SkolemSequence({1, 1, 3, 4, 5, 3, 2, 4, 2, 5});
        default: break;
    }
    const int s = n / 4;
    const PairTable pairs = n % 4 == 0 ? pairs_order_4s(s) : pairs_order_4s1(s);
    std::vector<int> seq(static_cast<std::size_t>(2 * n), 0);
    for (auto [p, q] : pairs) {
        seq[p - 1] = q - p;
        seq[q - 1] = q - p;
    }
    return SkolemSequence(std::move(seq));
}

std::optional<SkolemSequence> skolem_sequence_search(int n) {
    if (n < 1) return std::nullopt;
    std::vector<int> seq(static_cast<std::size_t>(2 * n), 0);
    // placing the largest gaps first keeps the tree small
    if (!search(seq, n)) return std::nullopt;
    return SkolemSequence(std::move(seq));
}

}  // namespace seatmatch
