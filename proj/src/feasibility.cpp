#include "seatmatch/feasibility.hpp"

#include <boost/dynamic_bitset.hpp>

namespace seatmatch {

std::optional<long long> Witness::param(const std::string& key) const {
    for (const auto& [k, v] : params) {
        if (k == key) return v;
    }
    return std::nullopt;
}

const char* to_string(Status s) {
    switch (s) {
        case Status::feasible: return "feasible";
        case Status::infeasible: return "infeasible";
        case Status::unknown: return "unknown";
    }
    return "unknown";
}

namespace {

ConditionResult fail(Witness w) { return {false, std::move(w)}; }

void require_size(const LengthList& l, Order order) {
    if (l.size() != order.n()) {
        throw InvalidArgument("list has " + std::to_string(l.size()) + " lengths but K_" +
                              std::to_string(order.v()) + " needs " + std::to_string(order.n()));
    }
}

int even_count(const LengthList& l) {
    int evens = 0;
    for (int len = 2; len <= l.size(); len += 2) evens += l.count(len);
    return evens;
}

}  // namespace

ConditionResult divisor_condition(const LengthList& l, Order order) {
    require_size(l, order);
    const int v = order.v(), n = order.n();
    for (int d = 2; d <= v; ++d) {
        if (v % d != 0 || n % d == 0) continue;
        int multiples = 0;
        for (int len = d; len <= l.size(); len += d) multiples += l.count(len);
        if (2 * multiples > v - d) {
            return fail({"divisor", {{"d", d}, {"multiples", multiples}, {"bound", (v - d) / 2}}, {}});
        }
    }
    return {};
}

ConditionResult even_count_condition(const LengthList& l) {
    int evens = even_count(l);
    if (evens % 2 != 0) return fail({"even-count", {{"evens", evens}}, {}});
    return {};
}

ConditionResult signed_sum_condition(const LengthList& l, int n) {
    if (!l.all_odd()) throw InvalidArgument("signed-sum condition needs an all-odd list");
    if (n < 1) throw InvalidArgument("signed-sum condition needs n >= 1");
    const std::size_t m = 2 * static_cast<std::size_t>(n);
    boost::dynamic_bitset<> reach(m);
    reach.set(0);
    for (int x : l.expanded()) {
        std::size_t k = static_cast<std::size_t>(x) % m;
        if (k == 0) continue;  // ±x ≡ 0
        auto plus = (reach << k) | (reach >> (m - k));
        auto minus = (reach >> k) | (reach << (m - k));
        reach = plus | minus;
    }
    if (!reach.test(static_cast<std::size_t>(n))) return fail({"signed-sum", {{"n", n}}, {}});
    return {};
}

ConditionResult projection_condition(const LengthList& l, Order order) {
    require_size(l, order);
    const int n = order.n();
    const auto support = l.support();
    if (support.empty()) return {};
    long long g = 0;
    for (int len : support) g = gcd(g, len);
    for (int c = 2; c <= g; ++c) {
        if (g % c != 0 || n % c != 0) continue;
        int evens = 0;
        for (int len = 2 * c; len <= l.size(); len += 2 * c) evens += l.count(len);
        if (evens % 2 != 0) return fail({"projection", {{"c", c}, {"evens", evens}}, {}});
    }
    return {};
}

// ---------------------------------------------------------------------------

TwoLengthInstance TwoLengthInstance::make(int n, int x, int y, int a) {
    if (n < 2 || x < 1 || y < 1 || x > n || y > n || x == y || a < 1 || a >= n) {
        throw InvalidArgument("invalid two-length instance (n=" + std::to_string(n) + ", x=" + std::to_string(x) +
                              ", y=" + std::to_string(y) + ", a=" + std::to_string(a) + ")");
    }
    return {n, x, y, a};
}

TwoLengthInstance TwoLengthInstance::from_list(const LengthList& l) {
    const auto s = l.support();
    if (s.size() != 2) throw InvalidArgument("not a two-length list: " + l.to_string());
    const int n = l.size();
    const int p = s[0], q = s[1];
    const int d = static_cast<int>(gcd(gcd(p, q), 2 * n));
    const bool p_odd = (p / d) % 2 == 1, q_odd = (q / d) % 2 == 1;
    int y;
    if (p_odd != q_odd) {
        y = p_odd ? p : q;
    } else {
        long long gp = gcd(p, 2 * n), gq = gcd(q, 2 * n);
        y = gq > gp ? q : p;  // equal gcds: smaller value
    }
    const int x = y == p ? q : p;
    return make(n, x, y, l.count(y));
}

LengthList TwoLengthInstance::list() const { return LengthList::from_counts({{x, n - a}, {y, a}}); }

Verdict decide_uniform(int n, int x) {
    if (n < 1 || x < 1 || x > n) throw InvalidArgument("uniform list needs 1 <= x <= n");
    const long long d = gcd(x, 2 * n);
    if (n % d == 0) return Verdict::feasible("prop-uniform");
    return Verdict::infeasible({"divisor", {{"d", d}, {"multiples", n}, {"bound", (2 * n - d) / 2}}, {}});
}

Verdict decide_two_lengths(const TwoLengthInstance& inst) {
    const auto& [n, x, y, a] = TwoLengthInstance::make(inst.n, inst.x, inst.y, inst.a);
    const int d = inst.d(), dx = inst.d_x(), dy = inst.d_y();
    if (n % d != 0) {
        return Verdict::infeasible({"divisor", {{"d", d}, {"multiples", n}, {"bound", (2 * n - d) / 2}}, {}});
    }
    const bool x_even = (x / d) % 2 == 0, y_even = (y / d) % 2 == 0;
    if (x_even && y_even) throw InternalError("both quotients even although d divides n");

    if (x_even || y_even) {
        // the even-quotient length must occur an even number of times, and if
        // its gcd with 2n does not divide n the odd one must occur often enough
        const int even_len = x_even ? x : y;
        const int even_cnt = x_even ? n - a : a;
        const int odd_cnt = n - even_cnt;
        const int de = x_even ? dx : dy;
        const std::string clause = x_even ? "1" : "2";
        if (even_cnt % 2 != 0) {
            return Verdict::infeasible({"even-count", {{"evens", even_cnt}}, {}});
        }
        if (n % de == 0) return Verdict::feasible("two-lengths-" + clause + "a");
        if (2 * odd_cnt >= de) return Verdict::feasible("two-lengths-" + clause + "b");
        return Verdict::infeasible(
            {"divisor", {{"d", de}, {"multiples", even_cnt}, {"bound", (2 * n - de) / 2}},
             "length " + std::to_string(even_len) + " occurs too often"});
    }

    // both quotients odd: an odd count of a length needs enough copies to
    // balance the signed sums inside each residue class
    if (a % 2 != 0 && static_cast<long long>(d) * a < dx) {
        return Verdict::infeasible({"signed-sum", {{"length", y}, {"count", a}, {"d_x", dx}}, {}});
    }
    if ((n - a) % 2 != 0 && static_cast<long long>(d) * (n - a) < dy) {
        return Verdict::infeasible({"signed-sum", {{"length", x}, {"count", n - a}, {"d_y", dy}}, {}});
    }
    return Verdict::feasible("two-lengths-3");
}

Verdict decide_x_y_n(int n, int x, int y) {
    if (!(1 <= x && x < y && y < n)) throw InvalidArgument("need 1 <= x < y < n");
    return Verdict::infeasible({"x-y-n", {{"x", x}, {"y", y}, {"n", n}}, {}});
}

// ---------------------------------------------------------------------------

namespace {

// Support is {first, first+step, ...} with every multiplicity equal; returns
// that multiplicity.
std::optional<int> uniform_progression(const LengthList& l, int first, int step) {
    const auto s = l.support();
    if (s.empty()) return std::nullopt;
    const int t = l.count(s.front());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != first + static_cast<int>(i) * step || l.count(s[i]) != t) return std::nullopt;
    }
    return t;
}

}  // namespace

std::optional<int> consecutive_family(const LengthList& l) { return uniform_progression(l, 1, 1); }

std::optional<int> odd_family(const LengthList& l) {
    auto t = uniform_progression(l, 1, 2);
    if (t && *t >= 2) return t;
    return std::nullopt;
}

std::optional<int> even_family(const LengthList& l) {
    auto t = uniform_progression(l, 2, 2);
    if (t && *t >= 2) return t;
    return std::nullopt;
}

namespace {

bool chain_family(const LengthList& l, int first) {
    const int n = l.size();
    if (n < 3 || n % 2 == 0 || l.count(n) != 1) return false;
    for (int len = 1; len < n; ++len) {
        int expect = (len >= first && (len - first) % 2 == 0) ? 2 : 0;
        if (l.count(len) != expect) return false;
    }
    return true;
}

}  // namespace

bool chain_odd_family(const LengthList& l) { return chain_family(l, 1); }
bool chain_even_family(const LengthList& l) { return chain_family(l, 2); }

bool skolem_stack_family(const LengthList& l) {
    const int t = l.max_length();
    if (t < 1) return false;
    for (int i = 1; i <= t; ++i) {
        if (l.count(i) < 1) return false;
        if (i < t && l.count(i) < l.count(i + 1)) return false;
    }
    // multiplicities are constant on each block {4k+2, 4k+3, 4k+4}, reading
    // zero past t
    for (int k = 0; 4 * k + 2 <= t; ++k) {
        int m = l.count(4 * k + 2);
        if (l.count(4 * k + 3) != m || l.count(4 * k + 4) != m) return false;
    }
    return true;
}

bool sparse_family(const LengthList& l) {
    long long r = 0, s = 0;
    for (int j = 2; j <= l.size(); ++j) {
        if (j % 2 == 0) r += l.count(j);
        s += static_cast<long long>((j - 1) / 2) * l.count(j);
    }
    return r % 2 == 0 && l.count(1) >= s;
}

Verdict decide(const LengthList& l, Order order) {
    require_size(l, order);
    const int n = order.n();

    if (auto c = even_count_condition(l); !c) return Verdict::infeasible(c.witness);
    if (auto c = divisor_condition(l, order); !c) return Verdict::infeasible(c.witness);
    if (l.all_odd()) {
        if (auto c = signed_sum_condition(l, n); !c) return Verdict::infeasible(c.witness);
    }
    if (auto c = projection_condition(l, order); !c) return Verdict::infeasible(c.witness);

    const auto s = l.support();
    if (s.size() == 1) return decide_uniform(n, s.front());
    if (s.size() == 2) return decide_two_lengths(TwoLengthInstance::from_list(l));
    if (s.size() == 3 && s[2] == n && l.count(n) == n - 2) return decide_x_y_n(n, s[0], s[1]);

    if (auto t = consecutive_family(l)) {
        const int m = n / *t;
        const bool ok = *t % 2 == 0 || m % 4 == 0 || m % 4 == 1;
        if (!ok) return Verdict::infeasible({"even-count", {{"evens", even_count(l)}}, {}});
        return Verdict::feasible(*t == 1 ? "skolem" : "consecutive");
    }
    if (odd_family(l)) return Verdict::feasible("odd-lengths");
    if (auto t = even_family(l)) {
        const int step = *t % 2 == 0 ? *t : 4 * *t;
        if (n % step == 0) return Verdict::feasible("even-lengths");
        return Verdict::infeasible({"projection", {{"c", 2}}, "odd number of even halves in one class"});
    }
    if (chain_odd_family(l)) return Verdict::feasible("chain-odd");
    if (chain_even_family(l)) return Verdict::feasible("chain-even");
    if (skolem_stack_family(l)) return Verdict::feasible("skolem-stack");
    if (sparse_family(l)) return Verdict::feasible("sparse");
    return Verdict::unknown();
}

}  // namespace seatmatch
