#include <doctest.h>

#include <set>

#include "seatmatch/constructors.hpp"
#include "seatmatch/oracle.hpp"
#include "support.hpp"

using namespace seatmatch;

namespace {

LengthList L(const char* s) { return LengthList::parse(s); }

}  // namespace

TEST_CASE("even x, gcd(x, 2n) divides n: K_40") {
    const auto r = construct_even_x_pair(20, 6, 12, 5);
    CHECK(r.route == "even-x-pair-case1");
    CHECK(r.verified);
    const Matching expect(40, {{0, 12}, {24, 36}, {5, 17}, {29, 1}, {8, 13}, {20, 25}, {32, 37},
                              {4, 9}, {16, 21}, {28, 33}, {10, 22}, {34, 6}, {18, 30}, {2, 14},
                              {26, 38}, {15, 27}, {39, 11}, {23, 35}, {7, 19}, {31, 3}});
    CHECK(r.matching == expect);
}

TEST_CASE("even x, gcd(x, 2n) does not divide n: K_42") {
    const auto r = construct_even_x_pair(21, 13, 12, 7);
    CHECK(r.route == "even-x-pair-case2");
    const Matching expect(42, {{0, 12}, {7, 19}, {24, 31}, {36, 1}, {6, 13}, {18, 25}, {14, 26},
                              {38, 8}, {20, 32}, {21, 33}, {3, 15}, {27, 39}, {28, 35}, {40, 5},
                              {10, 17}, {22, 29}, {34, 41}, {4, 11}, {30, 37}, {2, 9}, {16, 23}});
    CHECK(r.matching == expect);
}

TEST_CASE("even x pair preconditions") {
    CHECK(length_list(construct_even_x_pair(4, 2, 2, 1).matching) == L("1^2,2^2"));
    CHECK_THROWS_AS(construct_even_x_pair(4, 2, 3, 1), InvalidArgument);
    try {
        construct_even_x_pair(5, 2, 2, 1);  // three 2s
        FAIL("expected Infeasible");
    } catch (const Infeasible& e) {
        CHECK(e.condition() == "even-count");
    }
    try {
        // d = gcd(12, 42) = 6: at most (42 - 6)/2 = 18 twelves
        construct_even_x_pair(21, 1, 12, 7);
        FAIL("expected Infeasible");
    } catch (const Infeasible& e) {
        CHECK(e.condition() == "divisor");
    }
}

TEST_CASE("{1^a, x^{n-a}} for large a") {
    const auto r = construct_one_x_large_a(9, 7, 5);
    CHECK(r.route == "one-x-large-a-III.B");
    CHECK(r.matching == Matching(18, {{0, 11}, {1, 8}, {2, 9}, {3, 10}, {4, 5}, {6, 7},
                                      {12, 13}, {14, 15}, {16, 17}}));

    const auto c2 = construct_one_x_large_a(4, 3, 3);
    CHECK(c2.route == "one-x-large-a-II");
    CHECK(length_list(c2.matching) == L("1^3,3"));

    const auto c1 = construct_one_x_large_a(6, 3, 3);
    CHECK(c1.route == "one-x-large-a-I");
    CHECK(c1.matching == Matching(12, {{0, 3}, {1, 4}, {2, 5}, {6, 7}, {8, 9}, {10, 11}}));

    // boundary where the last unit interval is empty
    const auto j = construct_one_x_large_a(4, 3, 2);
    CHECK(j.route == "one-x-large-a-III.B");
    CHECK(j.matching == Matching(8, {{0, 5}, {1, 4}, {2, 3}, {6, 7}}));

    CHECK_THROWS_AS(construct_one_x_large_a(9, 7, 4), InvalidArgument);
    CHECK_THROWS_AS(construct_one_x_large_a(9, 4, 5), InvalidArgument);
}

TEST_CASE("every large-a case is reached and verifies") {
    std::set<std::string> routes;
    for (int n = 3; n <= 60; ++n) {
        for (int x = 3; x < n; x += 2) {
            for (int a = (n + 1) / 2; a < n; ++a) {
                const auto r = construct_one_x_large_a(n, x, a);
                CHECK(r.verified);
                routes.insert(r.route);
            }
        }
    }
    CHECK(routes == std::set<std::string>{"one-x-large-a-I", "one-x-large-a-II", "one-x-large-a-III.A",
                                          "one-x-large-a-III.B"});
}

TEST_CASE("{1^a, x^{n-a}} with x a unit") {
    CHECK(length_list(construct_one_x(9, 7, 5).matching) == L("1^5,7^4"));
    const auto small = construct_one_x(5, 3, 1);
    CHECK(small.route == "one-x-inverse");
    CHECK(length_list(small.matching) == L("1,3^4"));
    CHECK(length_list(construct_one_x(4, 3, 3).matching) == L("1^3,3"));
    CHECK_THROWS_AS(construct_one_x(6, 3, 2), InvalidArgument);
    for (int n = 3; n <= 40; ++n) {
        for (int x = 2; x < n; ++x) {
            if (gcd(x, 2 * n) != 1) continue;
            for (int a = 1; a < n; ++a) CHECK(construct_one_x(n, x, a).verified);
        }
    }
}

TEST_CASE("{1^a, n^{n-a}}") {
    CHECK(construct_one_n(3, 2) == Matching(6, {{0, 3}, {1, 2}, {4, 5}}));
    CHECK(construct_one_n(5, 2) == Matching(10, {{0, 5}, {1, 6}, {2, 7}, {3, 4}, {8, 9}}));
    CHECK(construct_one_n(5, 4) == Matching(10, {{0, 5}, {1, 2}, {3, 4}, {6, 7}, {8, 9}}));
    CHECK_THROWS_AS(construct_one_n(5, 3), InvalidArgument);
    CHECK_THROWS_AS(construct_one_n(6, 2), InvalidArgument);
}

TEST_CASE("odd pair: K_84 as printed") {
    const auto r = construct_odd_pair(42, 17, 15, 35);
    CHECK(r.route == "odd-pair-case2");
    std::vector<std::pair<int, int>> printed = {
        {0, 35},  {70, 21}, {56, 7},                                        // B
        {15, 50}, {30, 65}, {1, 16},  {45, 80}, {60, 11}, {31, 46},          // A_2^1, A_2^2
        {75, 26}, {6, 41},  {61, 76}, {36, 71}, {51, 2},  {22, 37},          // A_2^3, A_2^4
        {66, 17}, {81, 32}, {52, 67}, {12, 47}, {27, 62}, {82, 13},          // A_2^5, A_2^6
        {42, 77}, {57, 8},  {28, 43},                                        // A_2^7
        {72, 3},  {23, 38}, {58, 73}, {18, 33}, {53, 68}, {4, 19},           // A_0^1, A_0^2
        {48, 63}, {83, 14}, {34, 49}, {78, 9},  {29, 44}, {64, 79},          // A_0^3, A_0^4
        {24, 39}, {59, 74}, {10, 25}, {54, 69}, {5, 20},  {40, 55}};         // A_0^5, A_0^6
    std::vector<Edge> edges;
    for (auto [u, w] : printed) edges.push_back({u, w});
    CHECK(r.matching == Matching(84, edges));
}

TEST_CASE("odd pair small cases") {
    CHECK(length_list(construct_odd_pair(5, 2, 1, 3).matching) == L("1^3,3^2"));
    CHECK(length_list(construct_odd_pair(9, 3, 3, 1).matching) == L("1^3,3^6"));
    try {
        construct_odd_pair(9, 1, 3, 1);
        FAIL("expected Infeasible");
    } catch (const Infeasible& e) {
        CHECK(e.condition() == "signed-sum");
    }
    CHECK_THROWS_AS(construct_odd_pair(9, 2, 2, 1), InvalidArgument);
    // gcd(d_x, d_y) = gcd(3, 9) != 1
    CHECK_THROWS_AS(construct_odd_pair(9, 2, 3, 9), InvalidArgument);
}

TEST_CASE("residue lists of the worked decompositions") {
    std::string label;
    auto lists = two_length_residue_lists(TwoLengthInstance::make(30, 10, 15, 6), &label);
    CHECK(label == "even-a");
    CHECK(lists == std::vector<LengthList>{L("2^6"), L("2^6"), L("2^4,3^2"), L("2^4,3^2"), L("2^4,3^2")});

    lists = two_length_residue_lists(TwoLengthInstance::make(25, 10, 15, 5), &label);
    CHECK(lists == std::vector<LengthList>(5, L("2^4,3")));

    lists = two_length_residue_lists(TwoLengthInstance::make(90, 75, 9, 85), &label);
    CHECK(label == "case1");
    CHECK(lists == std::vector<LengthList>{L("3^30"), L("3^30"), L("25^5,3^25")});

    lists = two_length_residue_lists(TwoLengthInstance::make(90, 70, 42, 48), &label);
    CHECK(label == "case2");
    CHECK(lists == std::vector<LengthList>{L("35^2,21^43"), L("35^40,21^5")});

    lists = two_length_residue_lists(TwoLengthInstance::make(75, 45, 25, 59), &label);
    CHECK(label == "case3");
    CHECK(lists == std::vector<LengthList>{L("5^15"), L("5^15"), L("5^15"), L("9^5,5^10"), L("9^11,5^4")});

    CHECK(two_length_residue_lists(TwoLengthInstance::make(20, 12, 5, 6)).empty());
    CHECK_THROWS_AS(two_length_residue_lists(TwoLengthInstance::make(6, 2, 4, 3)), Infeasible);
}

TEST_CASE("lifted constructions realize their lists") {
    struct Case {
        int n, x, y, a;
        const char* route;
        const char* list;
    };
    for (const Case& c : {Case{30, 10, 15, 6, "two-lengths-1a-lift", "10^24,15^6"},
                          Case{25, 10, 15, 5, "two-lengths-1b-lift", "10^20,15^5"},
                          Case{90, 75, 9, 85, "two-lengths-3-case1", "75^5,9^85"},
                          Case{90, 70, 42, 48, "two-lengths-3-case2", "70^42,42^48"},
                          Case{75, 45, 25, 59, "two-lengths-3-case3", "45^16,25^59"}}) {
        const auto r = construct_two_lengths(TwoLengthInstance::make(c.n, c.x, c.y, c.a));
        CHECK(r.route == c.route);
        CHECK(length_list(r.matching) == L(c.list));
    }
}

TEST_CASE("construct_two_lengths refuses infeasible instances") {
    try {
        construct_two_lengths(TwoLengthInstance::make(6, 4, 1, 3));
        FAIL("expected Infeasible");
    } catch (const Infeasible& e) {
        CHECK(e.condition() == "even-count");
    }
}

TEST_CASE("two-length sweep: decide, construct and oracle agree for n <= 8") {
    for (int n = 2; n <= 8; ++n) {
        for (int x = 1; x <= n; ++x) {
            for (int y = x + 1; y <= n; ++y) {
                for (int a = 1; a < n; ++a) {
                    const auto inst = TwoLengthInstance::make(n, x, y, a);
                    const Verdict v = decide_two_lengths(inst);
                    const bool exists = oracle_solve(inst.list(), 2 * n).found();
                    INFO("n=" << n << " x=" << x << " y=" << y << " a=" << a);
                    CHECK(v.is_feasible() == exists);
                    if (v.is_feasible()) {
                        CHECK(verify_realizes(construct_two_lengths(inst).matching, inst.list()));
                    } else {
                        CHECK_THROWS_AS(construct_two_lengths(inst), Infeasible);
                    }
                }
            }
        }
    }
}
