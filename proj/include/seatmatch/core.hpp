#pragma once

// Domain types for perfect matchings of K_v whose edge lengths are prescribed:
// orders, length multisets, matchings, and realization checks.

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace seatmatch {

// ---------------------------------------------------------------------------
// Errors

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An edge {u,u} or a vertex outside [0, v-1].
class InvalidEdge : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

// A constructor was asked for a list that is proven not to be realizable.
class Infeasible : public Error {
public:
    Infeasible(std::string condition, const std::string& what)
        : Error(what), condition_(std::move(condition)) {}
    const std::string& condition() const noexcept { return condition_; }

private:
    std::string condition_;
};

// A sufficient-condition constructor whose hypotheses do not hold. Says
// nothing about realizability.
class NotApplicable : public Error {
public:
    using Error::Error;
};

// Self-verification of a construction failed. Never expected in practice.
class InternalError : public Error {
public:
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Modular helpers

long long gcd(long long a, long long b);

// Canonical representative of a modulo m, in [0, m-1].
inline long long mod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

// Inverse of a modulo m; throws InvalidArgument if gcd(a, m) != 1.
long long mod_inverse(long long a, long long m);

// ---------------------------------------------------------------------------
// Order

// Vertex count of an even complete graph K_v, v = 2n.
class Order {
public:
    static Order from_vertices(int v);
    static Order from_edges(int n) { return from_vertices(2 * n); }

    int v() const noexcept { return v_; }
    int n() const noexcept { return v_ / 2; }

    friend bool operator==(Order, Order) = default;

private:
    explicit Order(int v) : v_(v) {}
    int v_;
};

// ---------------------------------------------------------------------------
// LengthList

// Multiset of n edge lengths, each in [1, n], stored as a dense multiplicity
// array. The problem input L.
class LengthList {
public:
    LengthList() = default;

    // Every length must lie in [1, size]; the multiplicities must sum to the
    // list size, which is inferred.
    static LengthList from_counts(const std::map<int, int>& counts);
    static LengthList from_lengths(std::span<const int> lengths);
    static LengthList from_lengths(std::initializer_list<int> lengths) {
        return from_lengths(std::span<const int>(lengths.begin(), lengths.size()));
    }

    // "len^mult" terms separated by commas, e.g. "1^5,7^4". A missing
    // exponent means 1; whitespace is ignored.
    static LengthList parse(std::string_view text);

    int size() const noexcept { return size_; }
    int count(int length) const noexcept {
        return length >= 1 && length < static_cast<int>(mult_.size()) ? mult_[length] : 0;
    }
    // Distinct lengths in increasing order (the underlying set).
    std::vector<int> support() const;
    int max_length() const;
    bool all_odd() const;
    // Lengths with multiplicity, ascending.
    std::vector<int> expanded() const;

    // Canonical text form, e.g. "1^5,7^4"; multiplicity 1 omits the exponent.
    std::string to_string() const;

    friend bool operator==(const LengthList&, const LengthList&) = default;

private:
    int size_ = 0;
    std::vector<int> mult_{0};  // index 0 unused
};

// ---------------------------------------------------------------------------
// Matching

struct Edge {
    int u = 0;
    int w = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Set of pairwise disjoint edges of K_v, held canonically: each edge as
// (min, max) and the edges sorted lexicographically.
class Matching {
public:
    Matching() = default;
    // Throws InvalidEdge on a loop or out-of-range vertex and InvalidArgument
    // on a repeated endpoint.
    Matching(int v, std::vector<Edge> edges);
    Matching(int v, std::initializer_list<std::pair<int, int>> edges);

    int order() const noexcept { return v_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::size_t size() const noexcept { return edges_.size(); }
    bool is_perfect() const noexcept { return 2 * static_cast<int>(edges_.size()) == v_; }

    friend bool operator==(const Matching&, const Matching&) = default;

private:
    int v_ = 0;
    std::vector<Edge> edges_;
};

// Circular edge length min(|u-w|, v-|u-w|).
int edge_length(int v, int u, int w);
// |u-w| without wraparound.
int reduced_length(int u, int w);

// Lengths of a perfect matching; throws InvalidArgument if F is not perfect.
LengthList length_list(const Matching& f);
// Sorted multiset of reduced lengths. Not a LengthList: values may exceed v/2.
std::vector<int> reduced_length_list(const Matching& f);

struct Verification {
    bool ok = false;
    std::string diagnostic;  // first violated property; empty when ok
    explicit operator bool() const noexcept { return ok; }
};

// True iff the edges form a perfect matching of K_{2n} with length list L,
// where n = |L|. Accepts unvalidated edges so that malformed input is
// reported rather than rejected.
Verification verify_realizes(int v, std::span<const Edge> edges, const LengthList& target);
Verification verify_realizes(const Matching& f, const LengthList& target);

}  // namespace seatmatch
