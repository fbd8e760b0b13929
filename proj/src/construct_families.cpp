#include <algorithm>

#include "construct_util.hpp"
#include "seatmatch/constructors.hpp"
#include "seatmatch/skolem.hpp"
#include "seatmatch/transforms.hpp"

namespace seatmatch {

using detail::checked;
using detail::EdgeBuilder;

namespace {

LengthList progression(int first, int step, int last, int t) {
    std::map<int, int> counts;
    for (int len = first; len <= last; len += step) counts[len] = t;
    return LengthList::from_counts(counts);
}

// ℓ = ℓ' edge by edge, i.e. no edge wraps around.
bool no_wrap(const Matching& f) {
    return std::all_of(f.edges().begin(), f.edges().end(),
                       [&](const Edge& e) { return reduced_length(e.u, e.w) == edge_length(f.order(), e.u, e.w); });
}

Matching checked_flat(Matching f, const LengthList& target, const std::string& what) {
    f = checked(std::move(f), target, what);
    if (!no_wrap(f)) throw InternalError(what + " produced a wrapping edge");
    return f;
}

// Nested pairs {(2i+1)q - j, (2i+1)q + j} around the t centers of K_{2qt}.
void add_nested(EdgeBuilder& f, int q, int t, int j) {
    for (int i = 0; i < t; ++i) f.add((2LL * i + 1) * q - j, (2LL * i + 1) * q + j);
}

// {2^t, ..., (2n/t)^t} for t even.
Matching even_block(int n, int t) {
    const int q = n / t;
    EdgeBuilder f(2 * n);
    for (int j = 1; j <= q - 1; ++j) add_nested(f, q, t, j);
    for (int i = 0; i < t / 2; ++i) {
        f.add(4LL * i * q, (4LL * i + 2) * q);
        f.add((4LL * i + 1) * q, (4LL * i + 3) * q);
    }
    return f.build();
}

const Matching& base_k24() {
    static const Matching f(24, {{0, 8}, {1, 7}, {2, 6}, {3, 5}, {4, 12}, {9, 15},
                                 {10, 16}, {11, 13}, {14, 22}, {17, 21}, {18, 20}, {19, 23}});
    return f;
}

}  // namespace

Matching skolem_matching(int n) { return checked_flat(skolem_sequence(n).to_matching(), progression(1, 1, n, 1), "skolem"); }

Matching construct_uniform_odd(int n, int t) {
    if (t < 2 || n < 1) throw InvalidArgument("odd-lengths family needs t >= 2");
    if (n % t != 0) {
        throw Infeasible("divisor", std::to_string(t) + " does not divide " + std::to_string(n));
    }
    const long long w = 2LL * n / t;
    EdgeBuilder f(2 * n);
    for (long long i = 0; i < t; ++i) {
        for (long long j = 0; j < n / t; ++j) f.add(w * i + j, w * (i + 1) - j - 1);
    }
    return checked_flat(f.build(), progression(1, 2, static_cast<int>(w - 1), t), "odd-lengths");
}

SolveReport construct_uniform_even(int n, int t) {
    if (t < 2 || n < 1) throw InvalidArgument("even-lengths family needs t >= 2");
    const int s = t % 2 == 0 ? t : 4 * t;
    if (n % s != 0) {
        throw Infeasible(n % t == 0 ? "projection" : "divisor",
                         std::to_string(n) + " is not a multiple of " + std::to_string(s));
    }
    const LengthList target = progression(2, 2, 2 * n / t, t);
    SolveReport rep;
    if (t % 2 == 0) {
        rep.route = "even-lengths-even-t";
        rep.matching = checked_flat(even_block(n, t), target, rep.route);
        rep.verified = true;
        return rep;
    }

    rep.route = "even-lengths-odd-t";
    Matching inner = t == 3 ? base_k24() : concat(base_k24(), even_block(4 * (t - 3), t - 3));
    const int g = n / (4 * t);
    const int q = n / t;
    EdgeBuilder f(2 * n);
    for (const auto& e : inner.edges()) f.add(static_cast<long long>(g) * e.u, static_cast<long long>(g) * e.w);
    for (int j = 1; j <= q; ++j) {
        if (j % g == 0 && j / g <= 4) continue;
        add_nested(f, q, t, j);
    }
    if (g > 1) rep.detail.push_back("dilated by " + std::to_string(g));
    rep.matching = checked_flat(f.build(), target, rep.route);
    rep.verified = true;
    return rep;
}

SolveReport construct_consecutive(int n, int t) {
    if (t < 1 || n < 1 || n % t != 0) throw InvalidArgument("consecutive family needs t | n");
    const int m = n / t;
    const LengthList target = progression(1, 1, m, t);
    SolveReport rep;
    if (m % 4 == 0 || m % 4 == 1) {
        rep.route = "consecutive-skolem";
        rep.matching = checked_flat(concat(std::vector<Matching>(static_cast<std::size_t>(t), skolem_matching(m))),
                                    target, rep.route);
    } else if (t % 2 == 0) {
        rep.route = "consecutive-split";
        const int odd_n = t * ((m + 1) / 2), even_n = t * (m / 2);
        rep.matching = checked_flat(concat(construct_uniform_odd(odd_n, t), construct_uniform_even(even_n, t).matching),
                                    target, rep.route);
    } else {
        throw Infeasible("even-count", "odd t with n/t ≡ 2, 3 (mod 4) gives an odd number of even lengths");
    }
    rep.verified = true;
    return rep;
}

Matching construct_skolem_stack(const LengthList& l) {
    if (!skolem_stack_family(l)) throw NotApplicable("{" + l.to_string() + "} is not a Skolem staircase");
    std::vector<Matching> parts;
    const int t = l.max_length();
    for (int h = 1; h <= l.count(1); ++h) {
        int m = 0;
        for (int i = 1; i <= t && l.count(i) >= h; ++i) m = i;
        parts.push_back(skolem_matching(m));
    }
    return checked_flat(concat(parts), l, "skolem-stack");
}

Matching construct_chain(int n, ChainVariant variant) {
    if (n < 3 || n % 2 == 0) throw InvalidArgument("chain family needs n >= 3 odd");
    EdgeBuilder f(2 * n);
    std::map<int, int> counts{{n, 1}};
    if (variant == ChainVariant::odd) {
        for (int i = 0; i < n; ++i) f.add(i, 2 * n - 1 - i);
        for (int len = 1; len <= n - 2; len += 2) counts[len] = 2;
    } else {
        for (int i = 0; i <= (n - 3) / 2; ++i) f.add(i, n - 1 - i);
        for (int i = n; i <= (3 * n - 3) / 2; ++i) f.add(i, 3 * n - 1 - i);
        f.add((n - 1) / 2, (3 * n - 1) / 2);
        for (int len = 2; len <= n - 1; len += 2) counts[len] = 2;
    }
    return checked(f, LengthList::from_counts(counts), variant == ChainVariant::odd ? "chain-odd" : "chain-even");
}

Matching construct_sparse(const LengthList& l) {
    if (!sparse_family(l)) {
        throw NotApplicable("{" + l.to_string() + "} has an odd number of even lengths or too few 1s");
    }
    struct Block {
        int largest;
        Matching f;
    };
    std::vector<Block> blocks;
    auto f_x = [](int x) {
        EdgeBuilder b(2 * x + 2);
        b.add(0, 2 * x + 1);
        b.add_unit_pairs(1, 2 * x);
        return b.build();
    };
    auto f_xy = [](int x, int y) {
        EdgeBuilder b(2 * (x + y + 2));
        b.add(0, 2 * x + 2);
        b.add(2 * x + 1, 2 * x + 2 * y + 3);
        b.add_unit_pairs(1, 2 * x);
        b.add_unit_pairs(2 * x + 3, 2 * x + 2 * y + 2);
        return b.build();
    };

    std::vector<int> evens;
    int ones = l.count(1);
    for (int j = l.size(); j >= 2; --j) {
        for (int c = 0; c < l.count(j); ++c) {
            if (j % 2 == 0) {
                evens.push_back(j);
            } else {
                blocks.push_back({j, f_x((j - 1) / 2)});
                ones -= (j - 1) / 2;
            }
        }
    }
    for (std::size_t i = 0; i + 1 < evens.size(); i += 2) {
        const int big = evens[i], small = evens[i + 1];
        blocks.push_back({big, f_xy((small - 2) / 2, (big - 2) / 2)});
        ones -= (small - 2) / 2 + (big - 2) / 2;
    }
    std::stable_sort(blocks.begin(), blocks.end(), [](const Block& p, const Block& q) { return p.largest > q.largest; });
    std::vector<Matching> parts;
    for (auto& b : blocks) parts.push_back(std::move(b.f));
    for (; ones > 0; --ones) parts.push_back(f_x(0));
    return checked_flat(concat(parts), l, "sparse");
}

}  // namespace seatmatch
