#pragma once

// Matching rewrites shared by the composite constructions.

#include <vector>

#include "seatmatch/core.hpp"

namespace seatmatch {

// Project found an edge whose length is not a multiple of the modulus.
class NotDivisible : public Error {
public:
    NotDivisible(Edge edge, int length, const std::string& what) : Error(what), edge_(edge), length_(length) {}
    Edge edge() const noexcept { return edge_; }
    int length() const noexcept { return length_; }

private:
    Edge edge_;
    int length_;
};

// Rotation u -> (u + k) mod v inside K_v. Preserves edge lengths.
Matching translate_mod(const Matching& f, long long k);

// Plain shift u -> u + k into K_target (no wraparound). Preserves reduced
// lengths. Throws InvalidEdge if a shifted vertex leaves [0, target_v - 1].
Matching translate_into(const Matching& f, int k, int target_v);

// F1 ∪ (F2 + v1) in K_{v1+v2}; reduced lengths are the union of both sides.
Matching concat(const Matching& f1, const Matching& f2);
Matching concat(const std::vector<Matching>& parts);

// Relabeling u -> x·u mod v. Throws InvalidArgument unless gcd(x, v) = 1.
Matching scale_by_unit(const Matching& f, long long x);

// Residue classes of a matching of K_{2nc} all of whose lengths are multiples
// of c: part i holds the vertices congruent to i, relabeled u -> (u - i)/c.
struct ResidueDecomposition {
    int c = 1;
    std::vector<Matching> parts;
};

// Interleaves c matchings of K_{2n} into K_{2nc} via u -> c·u + i for part i.
// Lengths scale by c.
Matching lift(const std::vector<Matching>& parts);
Matching lift(const ResidueDecomposition& parts);

// Inverse of lift. Throws NotDivisible naming the first offending edge (in
// canonical order) and InvalidArgument if v/c is not an even integer.
ResidueDecomposition project(const Matching& f, int c);

}  // namespace seatmatch
