#include <doctest.h>

#include "seatmatch/constructors.hpp"
#include "seatmatch/oracle.hpp"

using namespace seatmatch;

namespace {

LengthList L(const char* s) { return LengthList::parse(s); }

SolveOptions no_oracle() {
    SolveOptions o;
    o.allow_oracle = false;
    return o;
}

}  // namespace

TEST_CASE("solve on worked lists") {
    auto out = solve(L("9^12"), Order::from_vertices(24));
    REQUIRE(out.report);
    CHECK(out.report->route == "prop-uniform");
    CHECK(out.report->verified);
    CHECK(verify_realizes(out.report->matching, L("9^12")));

    out = solve(L("4^3,6^7"), Order::from_vertices(20));
    CHECK(out.verdict.is_infeasible());
    CHECK(out.verdict.witness.condition == "projection");
    CHECK_FALSE(out.report);

    out = solve(L("1^5,7^4"), Order::from_vertices(18));
    REQUIRE(out.report);
    CHECK(out.report->route == "two-lengths-3");
    CHECK(out.report->matching == construct_one_x_large_a(9, 7, 5).matching);

    CHECK(solve(L("1,2,3,4,5"), Order::from_vertices(10)).report->route == "skolem");
    CHECK(solve(L("1^4,2^4,3^4,4^4,5^4,6^4,7^4"), Order::from_vertices(56)).report->route == "consecutive");
    CHECK(solve(L("2^7,4^7,6^7,8^7,10^7,12^7,14^7,16^7"), Order::from_vertices(112)).report->route ==
          "even-lengths");
    CHECK(solve(L("1^21,2^7,4,5^2,10^4"), Order::from_vertices(70)).report->route == "sparse");
    CHECK_THROWS_AS(solve(L("1,2"), Order::from_vertices(6)), InvalidArgument);
}

TEST_CASE("unknown lists fall back to the oracle") {
    const LengthList l = L("2,3^2,4");
    const auto plain = solve(l, Order::from_vertices(8), no_oracle());
    CHECK(plain.verdict.is_unknown());
    CHECK_FALSE(plain.report);

    const auto out = solve(l, Order::from_vertices(8));
    const bool exists = oracle_solve(l, 8).found();
    CHECK(out.verdict.is_feasible() == exists);
    if (exists) {
        REQUIRE(out.report);
        CHECK(out.report->route == "oracle");
        CHECK(verify_realizes(out.report->matching, l));
    } else {
        CHECK(out.verdict.witness.condition == "oracle-exhausted");
    }

    SolveOptions small;
    small.oracle_threshold = 6;
    CHECK(solve(l, Order::from_vertices(8), small).verdict.is_unknown());
}

TEST_CASE("oracle-exhausted certificates") {
    // an Unknown list nobody can realize
    bool seen = false;
    for (const auto& l : enumerate_lists(6, 6)) {
        if (!decide(l, Order::from_vertices(12)).is_unknown() || oracle_solve(l, 12).found()) continue;
        const auto out = solve(l, Order::from_vertices(12));
        CHECK(out.verdict.is_infeasible());
        CHECK(out.verdict.witness.condition == "oracle-exhausted");
        CHECK(out.verdict.witness.param("v") == 12);
        seen = true;
    }
    CHECK(seen);
}

TEST_CASE("dispatcher consistency for v <= 14") {
    for (int v = 2; v <= 14; v += 2) {
        for (const auto& l : enumerate_lists(v / 2, v / 2)) {
            INFO("v=" << v << " list " << l.to_string());
            const auto out = solve(l, Order::from_vertices(v), no_oracle());
            CHECK(out.verdict.is_feasible() == out.report.has_value());
            if (out.report) {
                CHECK(out.report->verified);
                CHECK(verify_realizes(out.report->matching, l));
                CHECK(out.report->route.rfind(out.verdict.route, 0) == 0);
            }
            const auto full = solve(l, Order::from_vertices(v));
            CHECK_FALSE(full.verdict.is_unknown());
        }
    }
}
