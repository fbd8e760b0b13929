#include <spdlog/spdlog.h>

#include "construct_util.hpp"
#include "seatmatch/constructors.hpp"
#include "seatmatch/oracle.hpp"

namespace seatmatch {

namespace {

SolveReport wrap(Matching f, std::string route) {
    SolveReport r;
    r.matching = std::move(f);
    r.route = std::move(route);
    r.verified = true;
    return r;
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

}  // namespace

SolveReport construct_for_route(const std::string& route, const LengthList& l) {
    const int n = l.size();
    const auto s = l.support();
    try {
        if (route == "prop-uniform" && s.size() == 1) return wrap(construct_uniform(n, s.front()), route);
        if (starts_with(route, "two-lengths-") && s.size() == 2) {
            return construct_two_lengths(TwoLengthInstance::from_list(l));
        }
        if (route == "skolem" && consecutive_family(l) == 1) return wrap(skolem_matching(n), route);
        if (route == "consecutive") {
            if (auto t = consecutive_family(l)) {
                SolveReport r = construct_consecutive(n, *t);
                r.detail.insert(r.detail.begin(), r.route);
                r.route = route;
                return r;
            }
        }
        if (route == "odd-lengths") {
            if (auto t = odd_family(l)) return wrap(construct_uniform_odd(n, *t), route);
        }
        if (route == "even-lengths") {
            if (auto t = even_family(l)) {
                SolveReport r = construct_uniform_even(n, *t);
                r.detail.insert(r.detail.begin(), r.route);
                r.route = route;
                return r;
            }
        }
        if (route == "chain-odd" && chain_odd_family(l)) return wrap(construct_chain(n, ChainVariant::odd), route);
        if (route == "chain-even" && chain_even_family(l)) return wrap(construct_chain(n, ChainVariant::even), route);
        if (route == "skolem-stack") return wrap(construct_skolem_stack(l), route);
        if (route == "sparse") return wrap(construct_sparse(l), route);
    } catch (const Infeasible& e) {
        throw InternalError("route " + route + " refused {" + l.to_string() + "}: " + e.what());
    } catch (const NotApplicable& e) {
        throw InternalError("route " + route + " does not apply to {" + l.to_string() + "}: " + e.what());
    }
    throw InternalError("route " + route + " does not apply to {" + l.to_string() + "}");
}

SolveOutcome solve(const LengthList& l, Order order, const SolveOptions& options) {
    SolveOutcome out;
    out.verdict = decide(l, order);
    spdlog::debug("decide {{{}}} in K_{}: {}", l.to_string(), order.v(), to_string(out.verdict.status));
    if (out.verdict.is_feasible()) {
        out.report = construct_for_route(out.verdict.route, l);
        out.report->matching = detail::checked(out.report->matching, l, out.report->route);
        out.report->verified = true;
        return out;
    }
    if (out.verdict.is_infeasible() || !options.allow_oracle || order.v() > options.oracle_threshold) return out;

    spdlog::info("no construction for {{{}}}; searching K_{} exhaustively", l.to_string(), order.v());
    OracleResult r = oracle_solve(l, order.v());
    spdlog::debug("oracle expanded {} nodes", r.stats.nodes_expanded);
    if (r.found()) {
        out.verdict = Verdict::feasible("oracle");
        out.report = wrap(detail::checked(*r.matching, l, "oracle"), "oracle");
        out.report->detail.push_back("nodes=" + std::to_string(r.stats.nodes_expanded));
    } else {
        out.verdict = Verdict::infeasible({"oracle-exhausted",
                                           {{"v", order.v()}, {"nodes", static_cast<long long>(r.stats.nodes_expanded)}},
                                           "exhaustive search found no matching"});
    }
    return out;
}

}  // namespace seatmatch
