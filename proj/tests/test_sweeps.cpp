#include <doctest.h>

#include <random>
#include <set>

#include "seatmatch/constructors.hpp"
#include "seatmatch/oracle.hpp"

using namespace seatmatch;

TEST_CASE("decide is sound against the oracle for every list with v <= 16") {
    for (int v = 2; v <= 16; v += 2) {
        for (const auto& l : enumerate_lists(v / 2, v / 2)) {
            const Verdict verdict = decide(l, Order::from_vertices(v));
            if (verdict.is_unknown()) continue;
            INFO("v=" << v << " list " << l.to_string());
            CHECK(verdict.is_feasible() == oracle_solve(l, v).found());
        }
    }
}

TEST_CASE("decide is sound on random lists up to v = 24") {
    std::mt19937 rng(20261014);
    OracleOptions options;
    options.parity_pruning = true;
    int decided = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int n = std::uniform_int_distribution<int>(9, 12)(rng);
        std::uniform_int_distribution<int> len(1, n);
        // few distinct lengths so that decide usually has an answer
        const int k = std::uniform_int_distribution<int>(1, 3)(rng);
        std::vector<int> pool;
        for (int i = 0; i < k; ++i) pool.push_back(len(rng));
        std::vector<int> lengths;
        for (int i = 0; i < n; ++i) lengths.push_back(pool[std::uniform_int_distribution<int>(0, k - 1)(rng)]);
        const LengthList l = LengthList::from_lengths(lengths);
        const Verdict verdict = decide(l, Order::from_edges(n));
        if (verdict.is_unknown()) continue;
        ++decided;
        INFO("list " << l.to_string());
        CHECK(verdict.is_feasible() == oracle_solve(l, 2 * n, options).found());
    }
    CHECK(decided > 150);
}

TEST_CASE("two-length constructions verify for every valid instance with n <= 14") {
    std::set<std::string> routes;
    for (int n = 2; n <= 14; ++n) {
        for (int x = 1; x <= n; ++x) {
            for (int y = 1; y <= n; ++y) {
                if (x == y) continue;
                for (int a = 1; a < n; ++a) {
                    const auto inst = TwoLengthInstance::make(n, x, y, a);
                    const Verdict v = decide_two_lengths(inst);
                    INFO("n=" << n << " x=" << x << " y=" << y << " a=" << a);
                    if (!v.is_feasible()) {
                        CHECK_THROWS_AS(construct_two_lengths(inst), Infeasible);
                        continue;
                    }
                    const auto r = construct_two_lengths(inst);
                    CHECK(r.verified);
                    CHECK(verify_realizes(r.matching, inst.list()));
                    routes.insert(r.route);
                }
            }
        }
    }
    for (const char* route : {"two-lengths-1a", "two-lengths-1b", "two-lengths-2a", "two-lengths-2b",
                              "two-lengths-3", "two-lengths-1a-lift", "two-lengths-1b-lift",
                              "two-lengths-3-case1", "two-lengths-3-case2", "two-lengths-3-case3"}) {
        INFO(route);
        CHECK(routes.count(route) == 1);
    }
}

TEST_CASE("uniform lists for n <= 40") {
    for (int n = 1; n <= 40; ++n) {
        for (int x = 1; x <= n; ++x) {
            const bool ok = n % gcd(x, 2 * n) == 0;
            INFO("n=" << n << " x=" << x);
            if (ok) {
                std::map<int, int> counts{{x, n}};
                CHECK(verify_realizes(construct_uniform(n, x), LengthList::from_counts(counts)));
            } else {
                CHECK_THROWS_AS(construct_uniform(n, x), Infeasible);
            }
        }
    }
}
