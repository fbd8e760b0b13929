#include <algorithm>

#include "construct_util.hpp"
#include "seatmatch/constructors.hpp"
#include "seatmatch/transforms.hpp"

namespace seatmatch {

using detail::checked;
using detail::EdgeBuilder;
using detail::two_list;

namespace {

std::string params(int n, int a, int x, int y) {
    return "(n=" + std::to_string(n) + ", a=" + std::to_string(a) + ", x=" + std::to_string(x) +
           ", y=" + std::to_string(y) + ")";
}

void require_two_length_ranges(int n, int a, int x, int y) {
    if (n < 2 || x < 1 || y < 1 || x > n || y > n || x == y || a < 1 || a >= n) {
        throw InvalidArgument("invalid two-length parameters " + params(n, a, x, y));
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// x even, gcd(gcd(x, 2n), y) = 1.
//
// The points i·x + j·y (i < 2n/d, j < d) are distinct mod 2n. Column pairs
// {ix, ix+y} give y-edges, row pairs {2ix, (2i+1)x} give x-edges; blocks of
// both kinds are stacked at offsets 2ky. When 2n/d is odd the last row is
// left over and paired along y by D.

SolveReport construct_even_x_pair(int n, int a, int x, int y) {
    require_two_length_ranges(n, a, x, y);
    const long long v = 2LL * n;
    const int d = static_cast<int>(gcd(x, v));
    if (x % 2 != 0) throw InvalidArgument("even-x pair needs x even " + params(n, a, x, y));
    if (gcd(d, y) != 1) throw InvalidArgument("even-x pair needs gcd(gcd(x,2n), y) = 1 " + params(n, a, x, y));
    const int nx = n - a;  // number of x-edges
    if (nx % 2 != 0) {
        throw Infeasible("even-count", "even length " + std::to_string(x) + " occurs an odd number of times");
    }
    const bool divides = n % d == 0;
    if (!divides && 2 * nx > 2 * n - d) {
        throw Infeasible("divisor", "length " + std::to_string(x) + " occurs more than (2n-d)/2 times");
    }

    const long long nbar = divides ? n / d : (2LL * n - d) / (2LL * d);
    const long long q = nx / (2 * nbar);
    const long long r = (nx % (2 * nbar)) / 2;
    const long long top = (d - 2) / 2;  // last block offset index

    EdgeBuilder f(static_cast<int>(v));
    auto add_a = [&] {
        for (long long i = 0; i < r; ++i) {
            f.add(2 * i * x, (2 * i + 1) * x);
            f.add(2 * i * x + y, (2 * i + 1) * x + y);
        }
        for (long long i = 2 * r; i < 2 * nbar; ++i) f.add(i * x, i * x + y);
    };
    auto add_b = [&](long long shift) {
        for (long long i = 0; i < nbar; ++i) {
            f.add(2 * i * x + shift, (2 * i + 1) * x + shift);
            f.add(2 * i * x + y + shift, (2 * i + 1) * x + y + shift);
        }
    };
    auto add_c = [&](long long shift) {
        for (long long i = 0; i < 2 * nbar; ++i) f.add(i * x + shift, i * x + y + shift);
    };
    auto add_d = [&] {
        const long long base = (v / d - 1) * x;
        for (long long j = 0; j <= top; ++j) f.add(base + 2 * j * y, base + (2 * j + 1) * y);
    };

    SolveReport rep;
    if (divides || r > 0) {
        add_a();
        for (long long k = 1; k <= q; ++k) add_b(2 * k * y);
        for (long long k = q + 1; k <= top; ++k) add_c(2 * k * y);
    } else {
        for (long long k = 0; k <= q - 1; ++k) add_b(2 * k * y);
        for (long long k = q; k <= top; ++k) add_c(2 * k * y);
    }
    if (!divides) add_d();
    rep.route = divides ? "even-x-pair-case1" : "even-x-pair-case2";
    rep.detail.push_back("nbar=" + std::to_string(nbar) + " q=" + std::to_string(q) + " r=" + std::to_string(r));
    rep.matching = checked(f, two_list(x, nx, y, a), rep.route);
    rep.verified = true;
    return rep;
}

// ---------------------------------------------------------------------------
// {1^a, x^{n-a}}, x odd, n/2 <= a < n. The b = n - a edges of length x sit
// at the start of [0, 2n-1]; the gaps they leave are even intervals filled
// with unit edges.

SolveReport construct_one_x_large_a(int n, int x, int a) {
    if (x % 2 == 0 || x <= 1 || x >= n || 2 * a < n || a >= n) {
        throw InvalidArgument("one-x construction needs x odd, 1 < x < n, n/2 <= a < n (n=" + std::to_string(n) +
                              ", x=" + std::to_string(x) + ", a=" + std::to_string(a) + ")");
    }
    const long long v = 2LL * n;
    const long long b = n - a;
    const long long s = b / x, t = b % x;
    EdgeBuilder f(static_cast<int>(v));
    auto add_rows = [&] {
        for (long long i = 0; i < s; ++i) {
            for (long long j = 0; j < x; ++j) f.add(2 * i * x + j, (2 * i + 1) * x + j);
        }
    };

    SolveReport rep;
    const long long z = n - x;
    const long long k = x / (2 * z);
    if (t == 0) {
        add_rows();
        f.add_unit_pairs(2 * s * x, v - 1);
        rep.route = "one-x-large-a-I";
    } else if (t % 2 == 1) {
        add_rows();
        for (long long j = 0; j < t; ++j) f.add(2 * s * x + j, (2 * s + 1) * x + j);
        f.add_unit_pairs(2 * s * x + t, 2 * s * x + x - 1);
        f.add_unit_pairs(2 * s * x + x + t, v - 1);
        rep.route = "one-x-large-a-II";
    } else if (s > 0 || k == 0) {
        add_rows();
        f.add(2 * s * x, (2 * s + 1) * x);
        for (long long j = 1; j <= t - 1; ++j) f.add((2 * s + 1) * x + j, (2 * s + 2) * x + j);
        f.add_unit_pairs(2 * s * x + 1, 2 * s * x + x - 1);
        f.add_unit_pairs(2 * s * x + x + t, 2 * s * x + 2 * x);
        f.add_unit_pairs(2 * s * x + 2 * x + t, v - 1);
        rep.route = "one-x-large-a-III.A";
    } else {
        // s = 0 and x > 2z, where n = x + z: the x-edges wrap as 2z + x ≡ -x
        const long long p = b / (2 * z), r = b % (2 * z);
        for (long long i = 0; i < p; ++i) f.add(2 * i * z, 2 * (i + 1) * z + x);
        for (long long i = 0; i < p; ++i) {
            for (long long j = 1; j <= 2 * z - 1; ++j) f.add(2 * i * z + j, 2 * i * z + x + j);
        }
        for (long long j = 1; j <= r - 1; ++j) f.add(2 * p * z + j, 2 * p * z + x + j);
        const long long h = r > 0 ? 1 : 0;
        if (r > 0) f.add(2 * p * z, 2 * (p + 1) * z + x);
        f.add_unit_pairs(b, x);
        f.add_unit_pairs(x + b - h + 1, 2 * (p + 1) * z + x - h);
        f.add_unit_pairs(2 * (p + 1) * z + x + 1, v - 1);
        rep.route = "one-x-large-a-III.B";
    }
    rep.detail.push_back("b=" + std::to_string(b) + " s=" + std::to_string(s) + " t=" + std::to_string(t));
    rep.matching = checked(f, two_list(1, a, x, static_cast<int>(b)), rep.route);
    rep.verified = true;
    return rep;
}

SolveReport construct_one_x(int n, int x, int a) {
    const long long v = 2LL * n;
    if (x <= 1 || x >= n || a < 1 || a >= n) {
        throw InvalidArgument("one-x construction needs 1 < x < n and 1 <= a < n");
    }
    if (gcd(x, v) != 1) throw InvalidArgument("one-x construction needs gcd(x, 2n) = 1");
    if (2 * a >= n) return construct_one_x_large_a(n, x, a);

    // build {1^{n-a}, ybar^a} with ybar ≡ ±x^{-1}, then multiply by x
    const long long y = mod_inverse(x, v);
    const int ybar = static_cast<int>(std::min(y, v - y));
    SolveReport inner = construct_one_x_large_a(n, ybar, n - a);
    SolveReport rep;
    rep.route = "one-x-inverse";
    rep.detail.push_back("inverse " + std::to_string(ybar) + " via " + inner.route);
    rep.matching = checked(scale_by_unit(inner.matching, x), two_list(1, a, x, n - a), rep.route);
    rep.verified = true;
    return rep;
}

Matching construct_one_n(int n, int a) {
    if (n % 2 == 0 || a % 2 != 0 || a < 2 || a >= n) {
        throw InvalidArgument("one-n construction needs n odd, a even, 2 <= a < n");
    }
    EdgeBuilder f(2 * n);
    for (int j = 0; j < n - a; ++j) f.add(j, n + j);
    f.add_unit_pairs(n - a, n - 1);
    f.add_unit_pairs(2 * n - a, 2 * n - 1);
    return checked(f, two_list(1, a, n, n - a), "one-n");
}

// ---------------------------------------------------------------------------
// x, y odd with gcd(d_x, d_y) = 1.


namespace {

struct PlainEdge {
    long long u, w;
};

// d > 1: expand a matching of K_{2m} with lengths z (and possibly ȳ) into
// blocks of d edges each, one residue triple per vertex pair.
Matching odd_pair_blocks(int n, int a, int x, int y, std::string& route) {
    const long long v = 2LL * n;
    const long long d = gcd(x, v);
    const long long m = n / d, z = x / d, mm = 2 * m;
    const long long xi = mod(y, mm);
    const long long ybar = std::min(xi, mm - xi);

    std::vector<PlainEdge> z_edges;
    bool special = false;
    if (a % 2 == 0) {
        const long long g = gcd(z, mm);
        for (long long j = 0; j < g; ++j) {
            for (long long i = 0; i < m / g; ++i) z_edges.push_back({2 * i * z + j, (2 * i + 1) * z + j});
        }
    } else {
        const long long mu = mod_inverse(z, mm);
        const long long theta = mod(ybar * mu, mm);
        special = true;
        for (long long i = 1; i <= (theta - 1) / 2; ++i) z_edges.push_back({(2 * i - 1) * z, 2 * i * z});
        for (long long i = (theta + 1) / 2; i <= m - 1; ++i) z_edges.push_back({2 * i * z, (2 * i + 1) * z});
    }

    EdgeBuilder f(static_cast<int>(v));
    auto add_a = [&](const PlainEdge& e, long long two_k) {
        const long long du = d * mod(e.u, mm), dw = d * mod(e.w, mm);
        for (long long i = 0; i < two_k / 2; ++i) {
            f.add(du + 2 * i * y, du + (2 * i + 1) * y);
            f.add(dw + 2 * i * y, dw + (2 * i + 1) * y);
        }
        for (long long i = two_k; i < d; ++i) f.add(du + i * y, dw + i * y);
    };

    const long long b = a / (d - 1), c = a % (d - 1);
    std::size_t next = 0;
    auto take = [&](long long count, long long two_k) {
        for (long long i = 0; i < count; ++i) {
            if (next >= z_edges.size()) throw InternalError("odd pair ran out of base edges");
            add_a(z_edges[next++], two_k);
        }
    };
    if (!special) {
        take(b, d - 1);
        if (c > 0) take(1, c);
        route = "odd-pair-case1";
    } else {
        // base at the endpoint from which the ȳ-edge steps by +y mod 2m
        const long long base = ybar == xi ? 0 : ybar;
        for (long long i = 0; i < d; ++i) f.add(d * base + 2 * i * y, d * base + (2 * i + 1) * y);
        take(b - 1, d - 1);
        if (c > 1) take(1, c - 1);
        route = "odd-pair-case2";
    }
    while (next < z_edges.size()) take(1, 0);
    return checked(f, two_list(x, n - a, y, a), route);
}

}  // namespace

SolveReport construct_odd_pair(int n, int a, int x, int y) {
    require_two_length_ranges(n, a, x, y);
    if (x % 2 == 0 || y % 2 == 0) throw InvalidArgument("odd pair needs x and y odd " + params(n, a, x, y));
    const long long v = 2LL * n;
    const long long dx = gcd(x, v), dy = gcd(y, v);
    if (gcd(dx, dy) != 1) throw InvalidArgument("odd pair needs gcd(d_x, d_y) = 1 " + params(n, a, x, y));
    if (a % 2 != 0 && a < dx) {
        throw Infeasible("signed-sum", "odd count " + std::to_string(a) + " of length " + std::to_string(y) +
                                           " is below gcd(x, 2n) = " + std::to_string(dx));
    }
    if ((n - a) % 2 != 0 && n - a < dy) {
        throw Infeasible("signed-sum", "odd count " + std::to_string(n - a) + " of length " + std::to_string(x) +
                                           " is below gcd(y, 2n) = " + std::to_string(dy));
    }

    const LengthList target = two_list(x, n - a, y, a);
    SolveReport rep;
    int sx = x, sy = y, sa = a;
    if (a > n - a) {
        std::swap(sx, sy);
        sa = n - a;
        rep.detail.push_back("lengths swapped so the second occurs at most n/2 times");
    }
    const long long d = gcd(sx, v);
    if (d == 1) {
        const long long p = mod_inverse(sx, v);
        const long long q = mod(static_cast<long long>(sy) * p, v);
        const int r = static_cast<int>(std::min(q, v - q));
        Matching base;
        if (r < n) {
            SolveReport inner = construct_one_x_large_a(n, r, n - sa);
            rep.detail.push_back("relabeled {1^" + std::to_string(n - sa) + "," + std::to_string(r) + "^" +
                                 std::to_string(sa) + "} via " + inner.route);
            base = std::move(inner.matching);
        } else {
            base = construct_one_n(n, n - sa);
            rep.detail.push_back("relabeled {1^" + std::to_string(n - sa) + "," + std::to_string(n) + "^" +
                                 std::to_string(sa) + "} via one-n");
        }
        rep.route = "odd-pair-unit";
        rep.matching = checked(scale_by_unit(base, sx), target, rep.route);
    } else {
        rep.matching = odd_pair_blocks(n, sa, sx, sy, rep.route);
    }
    rep.verified = true;
    return rep;
}

// ---------------------------------------------------------------------------
// d = gcd(x, y, 2n) > 1: one list per residue class mod d, lifted.

std::vector<LengthList> two_length_residue_lists(const TwoLengthInstance& in, std::string* case_label) {
    const TwoLengthInstance inst = TwoLengthInstance::make(in.n, in.x, in.y, in.a);
    const int d = inst.d();
    if (d == 1) return {};
    if (Verdict verdict = decide_two_lengths(inst); !verdict.is_feasible()) {
        throw Infeasible(verdict.witness.condition, "{" + inst.list().to_string() + "} is not realizable");
    }
    int x = inst.x, y = inst.y, a = inst.a;
    const int n = inst.n;
    if ((y / d) % 2 == 0) {
        std::swap(x, y);
        a = n - a;
    }
    const int xb = x / d, yb = y / d, nb = n / d;
    const int ex = static_cast<int>(gcd(x, 2 * n)) / d, ey = static_cast<int>(gcd(y, 2 * n)) / d;
    std::vector<int> ys(static_cast<std::size_t>(d), 0);  // count of ȳ per part
    std::string label;

    if (xb % 2 == 0) {
        const int q = (n - a) / (2 * d), r = ((n - a) % (2 * d)) / 2;
        for (int i = 0; i < d; ++i) ys[i] = i < r ? nb - (2 * q + 2) : nb - 2 * q;
        label = nb % ex == 0 ? "even-a" : "even-b";
    } else {
        const int q = a / nb, r = a % nb;
        const int s = (r % 2 == 1 && r < ex) ? ex - r : 0;
        const int t = ((nb - r) % 2 == 1 && nb - r < ey) ? ey - (nb - r) : 0;
        for (int i = 0; i < d; ++i) ys[i] = i < q ? nb : 0;
        if (s > 0) {
            ys[q - 1] = nb - s;
            ys[q] = r + s;
            label = "case2";
        } else if (t > 0) {
            ys[q] = r - t;
            ys[q + 1] = t;
            label = "case3";
        } else {
            if (q < d) ys[q] = r;
            label = "case1";
        }
    }

    // a part with c copies of ȳ
    auto part_ok = [&](int c) {
        if (c < 0 || c > nb) return false;
        if (c == 0) return decide_uniform(nb, xb).is_feasible();
        if (c == nb) return decide_uniform(nb, yb).is_feasible();
        return decide_two_lengths(TwoLengthInstance::make(nb, xb, yb, c)).is_feasible();
    };
    if (!std::all_of(ys.begin(), ys.end(), part_ok)) {
        // reach[i][s]: the first i parts can hold s copies of ȳ
        std::vector<std::vector<char>> reach(static_cast<std::size_t>(d) + 1,
                                             std::vector<char>(static_cast<std::size_t>(a) + 1, 0));
        std::vector<char> ok(static_cast<std::size_t>(nb) + 1);
        for (int c = 0; c <= nb; ++c) ok[c] = part_ok(c);
        reach[0][0] = 1;
        for (int i = 0; i < d; ++i) {
            for (int s0 = 0; s0 <= a; ++s0) {
                if (!reach[i][s0]) continue;
                for (int c = 0; c <= nb && s0 + c <= a; ++c) {
                    if (ok[c]) reach[i + 1][s0 + c] = 1;
                }
            }
        }
        if (!reach[d][a]) throw InternalError("no residue split for {" + inst.list().to_string() + "}");
        int left = a;
        for (int i = d; i > 0; --i) {
            int c = std::min(nb, left);
            while (!(ok[c] && reach[i - 1][left - c])) --c;
            ys[i - 1] = c;
            left -= c;
        }
        std::reverse(ys.begin(), ys.end());
        label = "balanced";
    }

    std::vector<LengthList> out;
    long long total = 0;
    for (int c : ys) {
        if (c < 0 || c > nb) throw InternalError("residue split out of range for {" + inst.list().to_string() + "}");
        total += c;
        out.push_back(two_list(xb, nb - c, yb, c));
    }
    if (total != a) throw InternalError("residue split does not add up for {" + inst.list().to_string() + "}");
    if (case_label) *case_label = label;
    return out;
}

SolveReport construct_two_lengths(const TwoLengthInstance& in) {
    const TwoLengthInstance inst = TwoLengthInstance::make(in.n, in.x, in.y, in.a);
    const Verdict verdict = decide_two_lengths(inst);
    if (!verdict.is_feasible()) {
        throw Infeasible(verdict.witness.condition, "{" + inst.list().to_string() + "} is not realizable");
    }
    const auto [n, x, y, a] = inst;
    SolveReport rep;
    const int d = inst.d();
    if (d == 1) {
        SolveReport inner;
        if (x % 2 == 0) {
            inner = construct_even_x_pair(n, a, x, y);
        } else if (y % 2 == 0) {
            inner = construct_even_x_pair(n, n - a, y, x);
        } else {
            inner = construct_odd_pair(n, a, x, y);
        }
        rep.route = verdict.route;
        rep.detail.push_back(inner.route);
        for (auto& s : inner.detail) rep.detail.push_back(std::move(s));
        rep.matching = std::move(inner.matching);
        rep.verified = true;
        return rep;
    }

    std::string label;
    const auto lists = two_length_residue_lists(inst, &label);
    std::vector<Matching> parts;
    for (const auto& l : lists) {
        const auto s = l.support();
        if (s.size() == 1) {
            parts.push_back(construct_uniform(l.size(), s.front()));
            rep.detail.push_back("{" + l.to_string() + "} uniform");
        } else {
            SolveReport sub = construct_two_lengths(TwoLengthInstance::make(l.size(), x / d, y / d, l.count(y / d)));
            rep.detail.push_back("{" + l.to_string() + "} " + sub.detail.front());
            parts.push_back(std::move(sub.matching));
        }
    }
    rep.route = verdict.route + (verdict.route == "two-lengths-3" && label != "balanced" ? "-" + label : "-lift");
    rep.matching = checked(lift(parts), inst.list(), rep.route);
    rep.verified = true;
    return rep;
}

}  // namespace seatmatch
