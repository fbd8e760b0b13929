#pragma once

// Decision procedures for realizability of a length list in K_{2n}:
// necessary conditions valid for every list, and exact characterizations of
// the families with a known answer.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seatmatch/core.hpp"

namespace seatmatch {

// Identifies a checkable reason for infeasibility, e.g. condition "divisor"
// with parameter d.
struct Witness {
    std::string condition;
    std::vector<std::pair<std::string, long long>> params;
    std::string detail;

    std::optional<long long> param(const std::string& key) const;
    friend bool operator==(const Witness&, const Witness&) = default;
};

enum class Status { feasible, infeasible, unknown };

const char* to_string(Status s);

struct Verdict {
    Status status = Status::unknown;
    std::string route;  // construction identifier when feasible
    Witness witness;    // populated when infeasible

    static Verdict feasible(std::string route) { return {Status::feasible, std::move(route), {}}; }
    static Verdict infeasible(Witness w) { return {Status::infeasible, {}, std::move(w)}; }
    static Verdict unknown() { return {}; }

    bool is_feasible() const noexcept { return status == Status::feasible; }
    bool is_infeasible() const noexcept { return status == Status::infeasible; }
    bool is_unknown() const noexcept { return status == Status::unknown; }
};

struct ConditionResult {
    bool pass = true;
    Witness witness;  // set on failure
    explicit operator bool() const noexcept { return pass; }
};

// For every divisor d of v with d ∤ n, at most (v - d)/2 lengths are
// multiples of d. Reports the smallest violating d.
ConditionResult divisor_condition(const LengthList& l, Order order);

// The number of even lengths (with multiplicity) is even.
ConditionResult even_count_condition(const LengthList& l);

// For an all-odd list: some choice of signs gives Σ ±x_i ≡ n (mod 2n).
// Throws InvalidArgument if an even length is present.
ConditionResult signed_sum_condition(const LengthList& l, int n);

// For every c > 1 dividing n and every length, the c residue-class sublists
// would each need an even number of even lengths after dividing by c, so the
// multiples of 2c must occur an even number of times.
ConditionResult projection_condition(const LengthList& l, Order order);

// L = {x^{n-a}, y^a} with x != y and 1 <= a < n.
struct TwoLengthInstance {
    int n = 0;
    int x = 0;
    int y = 0;
    int a = 0;

    // Validates the ranges; throws InvalidArgument.
    static TwoLengthInstance make(int n, int x, int y, int a);
    // Labels the two lengths of a two-length list: y is the length whose
    // quotient by gcd(x, y, 2n) is odd; when both are odd, y has the larger
    // gcd with 2n, then the smaller value.
    static TwoLengthInstance from_list(const LengthList& l);

    int d_x() const { return static_cast<int>(gcd(x, 2 * n)); }
    int d_y() const { return static_cast<int>(gcd(y, 2 * n)); }
    int d() const { return static_cast<int>(gcd(gcd(x, y), 2 * n)); }
    LengthList list() const;
};

Verdict decide_uniform(int n, int x);

// Complete answer for two distinct lengths. Feasible routes are
// "two-lengths-1a", "-1b", "-2a", "-2b", "-3" naming the satisfied clause.
Verdict decide_two_lengths(const TwoLengthInstance& inst);

// {x, y, n^{n-2}} with 1 <= x < y < n is never realizable.
Verdict decide_x_y_n(int n, int x, int y);

// Recognizers for the list families with explicit constructions. Each returns
// the family parameter when l belongs to the family.
std::optional<int> consecutive_family(const LengthList& l);  // {1^t,...,(n/t)^t} -> t
std::optional<int> odd_family(const LengthList& l);          // {1^t,3^t,...} -> t, t >= 2
std::optional<int> even_family(const LengthList& l);         // {2^t,4^t,...} -> t, t >= 2
bool chain_odd_family(const LengthList& l);                  // {1^2,3^2,...,(n-2)^2,n}
bool chain_even_family(const LengthList& l);                 // {2^2,4^2,...,(n-1)^2,n}
bool skolem_stack_family(const LengthList& l);
bool sparse_family(const LengthList& l);

// Full decision pipeline. Returns Unknown when no condition or family
// applies.
Verdict decide(const LengthList& l, Order order);

}  // namespace seatmatch
