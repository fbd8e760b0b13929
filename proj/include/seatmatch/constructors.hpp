#pragma once

// Explicit constructions of perfect matchings of K_{2n} with a prescribed
// length list. Every constructor checks its own output with verify_realizes
// and throws InternalError if the check fails.

#include <optional>
#include <string>
#include <vector>

#include "seatmatch/core.hpp"
#include "seatmatch/feasibility.hpp"

namespace seatmatch {

struct SolveReport {
    Matching matching;
    std::string route;
    // Sub-steps of composite constructions, outermost first, e.g. the list
    // handed to each residue class of a lift.
    std::vector<std::string> detail;
    bool verified = false;
};

// {x^n}; requires gcd(x, 2n) | n.
Matching construct_uniform(int n, int x);

// {x^{n-a}, y^a} for x even with gcd(gcd(x, 2n), y) = 1 and n - a even; when
// gcd(x, 2n) ∤ n additionally n - a <= (2n - gcd(x, 2n))/2.
SolveReport construct_even_x_pair(int n, int a, int x, int y);

// {1^a, x^{n-a}} for x odd, 1 < x < n, n/2 <= a < n.
SolveReport construct_one_x_large_a(int n, int x, int a);

// {1^a, x^{n-a}} for gcd(x, 2n) = 1, 1 < x < n, 1 <= a < n.
SolveReport construct_one_x(int n, int x, int a);

// {1^a, n^{n-a}} for n odd, a even, 2 <= a < n.
Matching construct_one_n(int n, int a);

// {x^{n-a}, y^a} for x, y odd with gcd(gcd(x,2n), gcd(y,2n)) = 1, where an
// odd count of either length is at least that length's gcd with 2n.
SolveReport construct_odd_pair(int n, int a, int x, int y);

// Any realizable two-length list. The lengths keep the instance's labeling
// unless x/d must be swapped into the odd role.
SolveReport construct_two_lengths(const TwoLengthInstance& inst);

// The per-residue lists a two-length instance with d = gcd(x, y, 2n) > 1 is
// split into, before lifting. Empty when d = 1. Throws Infeasible when the
// instance is not realizable.
std::vector<LengthList> two_length_residue_lists(const TwoLengthInstance& inst, std::string* case_label = nullptr);

// {1, 2, ..., n} via a Skolem sequence; n ≡ 0, 1 (mod 4).
Matching skolem_matching(int n);

// {1^t, 3^t, ..., (2n/t - 1)^t}; t >= 2, t | n.
Matching construct_uniform_odd(int n, int t);

// {2^t, 4^t, ..., (2n/t)^t}; t >= 2 and n ≡ 0 mod t (t even) or 4t (t odd).
SolveReport construct_uniform_even(int n, int t);

// {1^t, 2^t, ..., (n/t)^t}; t | n and (t even or n/t ≡ 0, 1 mod 4).
SolveReport construct_consecutive(int n, int t);

// Lists with a_1 >= a_2 >= ... >= a_t >= 1 and a_{4k+2} = a_{4k+3} = a_{4k+4}:
// a stack of translated Skolem matchings.
Matching construct_skolem_stack(const LengthList& l);

enum class ChainVariant { odd, even };

// n >= 3 odd. odd: {1^2, 3^2, ..., (n-2)^2, n}; even: {2^2, 4^2, ..., (n-1)^2, n}.
Matching construct_chain(int n, ChainVariant variant);

// Lists with an even number of even lengths and enough 1s to pad every
// block. Throws NotApplicable otherwise.
Matching construct_sparse(const LengthList& l);

// Builds the matching for a Feasible verdict route. Throws InternalError if
// the route does not apply to l.
SolveReport construct_for_route(const std::string& route, const LengthList& l);

struct SolveOptions {
    bool allow_oracle = true;
    int oracle_threshold = 28;  // largest v searched exhaustively
};

struct SolveOutcome {
    Verdict verdict;
    std::optional<SolveReport> report;  // set iff the verdict is feasible
};

// decide, then construct; Unknown lists go to the exhaustive oracle when
// allowed and small enough.
SolveOutcome solve(const LengthList& l, Order order, const SolveOptions& options = {});

}  // namespace seatmatch
