#pragma once

// Exact backtracking search for matchings of K_v with a prescribed length
// list, and the exhaustive sweeps built on it.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "seatmatch/core.hpp"

namespace seatmatch {

struct SearchStats {
    std::uint64_t nodes_expanded = 0;
    std::uint64_t solutions_found = 0;
    std::chrono::nanoseconds wall_time{0};
};

struct OracleOptions {
    // Fix the edge at vertex 0 up to rotation and reflection. Existence only.
    bool symmetry = true;
    // Cut branches whose unmatched vertices cannot be split by the remaining
    // lengths: odd lengths join vertices of opposite parity (even v only).
    bool parity_pruning = false;
    // Abort after this many nodes; the result is then neither found nor
    // exhausted.
    std::optional<std::uint64_t> node_limit;
};

struct OracleResult {
    std::optional<Matching> matching;  // for odd v, one vertex stays uncovered
    SearchStats stats;
    bool aborted = false;

    bool found() const noexcept { return matching.has_value(); }
    bool exhausted() const noexcept { return !matching && !aborted; }
};

// Depth-first search on the smallest unmatched vertex. v may be odd, in
// which case |l| = (v-1)/2 and the result is a near-perfect matching.
OracleResult oracle_solve(const LengthList& l, int v, const OracleOptions& options = {});

// Number of distinct (near-)perfect matchings realizing l; v <= 12.
std::uint64_t oracle_count(const LengthList& l, int v);

// Multisets of size n over [1, max_len], in lexicographic order of their
// ascending sequences.
class MultisetEnumerator {
public:
    MultisetEnumerator(int n, int max_len);

    // False once every multiset has been produced.
    bool next(LengthList& out);

private:
    std::vector<int> seq_;
    int max_len_;
    bool done_ = false;
    bool started_ = false;
};

std::vector<LengthList> enumerate_lists(int n, int max_len,
                                        const std::function<bool(const LengthList&)>& filter = {});

std::uint64_t binomial(int n, int k);

struct Counterexample {
    LengthList list;
    bool oracle_feasible = false;
    bool predicted_feasible = false;
    std::optional<Matching> matching;  // the certificate when feasible
    std::uint64_t nodes = 0;           // size of the refuting search otherwise
};

struct ConjectureReport {
    int p = 0;
    std::uint64_t lists_checked = 0;
    std::vector<Counterexample> counterexamples;
    bool agrees = true;
};

bool is_odd_prime(int p);

// For every list of p values from [1, p-1]: the oracle finds a matching of
// K_{2p} iff the list has an even number of even values. Throws
// InvalidArgument unless p is an odd prime.
ConjectureReport check_conjecture(int p, int workers = 1, const OracleOptions& options = {});

// Every list of n values from {x <= n : gcd(x, 2n) = 1} is realizable.
bool check_coprime_lists(int n, int workers = 1);

struct SweepRecord {
    LengthList list;
    std::string status;  // "found", "exhausted" or "aborted"
    std::uint64_t nodes = 0;
    double millis = 0;
};

// Runs the oracle on every list, in parallel, and hands records to sink in
// input order.
void sweep(const std::vector<LengthList>& lists, int v, int workers, const OracleOptions& options,
           const std::function<void(const SweepRecord&)>& sink);

// Runs f(i) for i in [0, count) on a pool of workers.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& f);

}  // namespace seatmatch
