#pragma once

#include <optional>
#include <vector>

#include "seatmatch/core.hpp"

namespace seatmatch {

// Sequence s_0..s_{2n-1} in which every k in [1, n] occurs exactly twice, at
// positions exactly k apart.
class SkolemSequence {
public:
    // Throws InvalidArgument if seq violates the invariant.
    explicit SkolemSequence(std::vector<int> seq);

    int order() const noexcept { return static_cast<int>(seq_.size() / 2); }
    const std::vector<int>& values() const noexcept { return seq_; }
    // Position pairs {i, i+k}, one per k, as a perfect matching of K_{2n}.
    Matching to_matching() const;

    static bool is_valid(const std::vector<int>& seq);

private:
    std::vector<int> seq_;
};

// Direct construction for n ≡ 0, 1 (mod 4); throws Infeasible otherwise.
SkolemSequence skolem_sequence(int n);

// Exhaustive search; nullopt when no sequence of order n exists. Practical
// for n up to about 30.
std::optional<SkolemSequence> skolem_sequence_search(int n);

}  // namespace seatmatch
