#include "seatmatch/cli.hpp"

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "seatmatch/constructors.hpp"
#include "seatmatch/json_io.hpp"
#include "seatmatch/oracle.hpp"
#include "seatmatch/skolem.hpp"

namespace seatmatch::cli {

namespace {

struct UsageError : Error {
    using Error::Error;
};

void configure_logging() {
    static bool done = false;
    if (done) return;
    done = true;
    auto logger = spdlog::stderr_color_mt("seatmatch");
    spdlog::set_default_logger(logger);
    spdlog::set_level(spdlog::level::warn);
    if (const char* env = std::getenv("SEATMATCH_LOG")) {
        spdlog::set_level(spdlog::level::from_str(env));
    }
}

std::string edges_text(const Matching& f) {
    std::ostringstream s;
    for (std::size_t i = 0; i < f.edges().size(); ++i) {
        const auto& e = f.edges()[i];
        s << (i ? " " : "") << '{' << e.u << ',' << e.w << '}';
    }
    return s.str();
}

std::string witness_text(const Witness& w) {
    std::string s = w.condition;
    for (const auto& [k, v] : w.params) s += " " + k + "=" + std::to_string(v);
    if (!w.detail.empty()) s += " (" + w.detail + ")";
    return s;
}

int verdict_code(const Verdict& v) {
    if (v.is_feasible()) return exit_ok;
    if (v.is_infeasible()) return exit_no;
    return exit_unknown;
}

LengthList parse_list(const std::string& text) {
    try {
        return LengthList::parse(text);
    } catch (const InvalidArgument& e) {
        throw UsageError(std::string("--list: ") + e.what());
    }
}

Order parse_order(int v) {
    try {
        return Order::from_vertices(v);
    } catch (const InvalidArgument& e) {
        throw UsageError("--v " + std::to_string(v) + ": " + e.what());
    }
}

void require_fit(const LengthList& l, int v) {
    if (l.size() != v / 2) {
        throw UsageError("--list " + l.to_string() + " has " + std::to_string(l.size()) + " lengths but --v " + std::to_string(v) +
                         " needs " + std::to_string(v / 2));
    }
}

Json read_json_input(const std::string& path) {
    try {
        if (path == "-") return Json::parse(std::cin);
        std::ifstream in(path);
        if (!in) throw UsageError("--input " + path + ": cannot open");
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw UsageError("--input " + path + ": " + e.what());
    }
}

struct Options {
    int v = 0;
    std::string list;
    int p = 0;
    int n = 0;
    std::string format = "json";
    int workers = 1;
    int oracle_threshold = 28;
    bool no_oracle = false;
    bool no_symmetry = false;
    bool parity_pruning = false;
    bool long_run = false;
    std::string input;
    int max_len = 0;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    configure_logging();
    Options o;
    CLI::App app{"Perfect matchings of K_v with prescribed edge lengths", "seatmatch"};
    app.require_subcommand(1);
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    };

    auto* solve_cmd = app.add_subcommand("solve", "Decide and construct a matching");
    solve_cmd->add_option("--v", o.v, "Number of vertices")->required();
    solve_cmd->add_option("--list", o.list, "Length list, e.g. 1^5,7^4")->required();
    solve_cmd->add_option("--oracle-threshold", o.oracle_threshold, "Largest v searched exhaustively");
    solve_cmd->add_flag("--no-oracle", o.no_oracle, "Never fall back to exhaustive search");
    add_format(solve_cmd);

    auto* decide_cmd = app.add_subcommand("decide", "Report the verdict without constructing");
    decide_cmd->add_option("--v", o.v, "Number of vertices")->required();
    decide_cmd->add_option("--list", o.list, "Length list")->required();
    add_format(decide_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Check a matching file against a list");
    verify_cmd->add_option("--input", o.input, "Matching JSON file, or - for stdin")->required();
    verify_cmd->add_option("--list", o.list, "Length list")->required();
    add_format(verify_cmd);

    auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive search");
    oracle_cmd->add_option("--v", o.v, "Number of vertices (odd allowed)")->required();
    oracle_cmd->add_option("--list", o.list, "Length list")->required();
    oracle_cmd->add_flag("--no-symmetry", o.no_symmetry, "Search without fixing vertex 0");
    oracle_cmd->add_flag("--parity-pruning", o.parity_pruning, "Cut branches by vertex parity");
    add_format(oracle_cmd);

    auto* conj_cmd = app.add_subcommand("conjecture", "Sweep all lists of p values below p");
    conj_cmd->add_option("--p", o.p, "Odd prime")->required();
    conj_cmd->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
    conj_cmd->add_flag("--long", o.long_run, "Allow p >= 13");
    conj_cmd->add_flag("--parity-pruning", o.parity_pruning, "Cut branches by vertex parity");
    add_format(conj_cmd);

    auto* skolem_cmd = app.add_subcommand("skolem", "Skolem sequence and its matching");
    skolem_cmd->add_option("--n", o.n, "Order")->required();
    add_format(skolem_cmd);

    auto* sweep_cmd = app.add_subcommand("sweep", "Oracle on every list of K_v, one JSON record per line");
    sweep_cmd->add_option("--v", o.v, "Number of vertices")->required();
    sweep_cmd->add_option("--max-len", o.max_len, "Largest length (default v/2)");
    sweep_cmd->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
    sweep_cmd->add_flag("--parity-pruning", o.parity_pruning, "Cut branches by vertex parity");

    const bool json = [&] {
        for (int i = 1; i < argc; ++i) {
            std::string a = argv[i];
            if (a == "--format=text" || (a == "--format" && i + 1 < argc && std::string(argv[i + 1]) == "text")) {
                return false;
            }
        }
        return true;
    }();
    auto usage = [&](const std::string& msg) {
        err << "seatmatch: " << msg << '\n';
        if (json) out << Json{{"error", msg}, {"exit", exit_usage}}.dump() << '\n';
        return exit_usage;
    };

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        if (argc > 1 && argv[1][0] != '-' && !app.get_subcommand_no_throw(argv[1])) {
            return usage(std::string("unknown subcommand '") + argv[1] + "'");
        }
        for (const CLI::App* sub : app.get_subcommands()) {
            const auto extra = sub->remaining();
            if (!extra.empty()) return usage("unexpected argument '" + extra.front() + "'");
        }
        return usage(e.what());
    }

    try {
        if (*solve_cmd) {
            if (o.oracle_threshold % 2 != 0) {
                throw UsageError("--oracle-threshold " + std::to_string(o.oracle_threshold) + " must be even");
            }
            const Order order = parse_order(o.v);
            const LengthList l = parse_list(o.list);
            require_fit(l, o.v);
            SolveOptions so;
            so.allow_oracle = !o.no_oracle;
            so.oracle_threshold = o.oracle_threshold;
            SolveOutcome r = solve(l, order, so);
            if (json) {
                Json j = r.report ? to_json(*r.report) : Json::object();
                j["status"] = to_string(r.verdict.status);
                if (r.verdict.is_infeasible()) j["witness"] = to_json(r.verdict.witness);
                out << j.dump() << '\n';
            } else {
                out << "status: " << to_string(r.verdict.status) << '\n';
                if (r.report) {
                    out << "route: " << r.report->route << '\n';
                    for (const auto& d : r.report->detail) out << "detail: " << d << '\n';
                    out << "edges: " << edges_text(r.report->matching) << '\n';
                }
                if (r.verdict.is_infeasible()) out << "witness: " << witness_text(r.verdict.witness) << '\n';
            }
            return verdict_code(r.verdict);
        }
        if (*decide_cmd) {
            const Order order = parse_order(o.v);
            const LengthList l = parse_list(o.list);
            require_fit(l, o.v);
            const Verdict v = decide(l, order);
            if (json) {
                out << to_json(v).dump() << '\n';
            } else {
                out << "status: " << to_string(v.status) << '\n';
                if (v.is_feasible()) out << "route: " << v.route << '\n';
                if (v.is_infeasible()) out << "witness: " << witness_text(v.witness) << '\n';
            }
            return verdict_code(v);
        }
        if (*verify_cmd) {
            const LengthList l = parse_list(o.list);
            RawMatching raw;
            try {
                raw = raw_matching_from_json(read_json_input(o.input));
            } catch (const InvalidArgument& e) {
                throw UsageError("--input " + o.input + ": " + e.what());
            }
            const Verification res = verify_realizes(raw.v, raw.edges, l);
            if (json) {
                out << Json{{"ok", res.ok}, {"diagnostic", res.diagnostic}}.dump() << '\n';
            } else {
                out << (res.ok ? "ok" : "fail: " + res.diagnostic) << '\n';
            }
            return res.ok ? exit_ok : exit_no;
        }
        if (*oracle_cmd) {
            if (o.v < 1) throw UsageError("--v " + std::to_string(o.v) + " must be positive");
            const LengthList l = parse_list(o.list);
            require_fit(l, o.v);
            OracleOptions oo;
            oo.symmetry = !o.no_symmetry;
            oo.parity_pruning = o.parity_pruning;
            const OracleResult r = oracle_solve(l, o.v, oo);
            if (json) {
                Json j = {{"status", r.found() ? "found" : "exhausted"}, {"stats", to_json(r.stats)}};
                j["matching"] = r.matching ? to_json(*r.matching) : Json(nullptr);
                out << j.dump() << '\n';
            } else {
                out << (r.found() ? "found" : "exhausted") << " after " << r.stats.nodes_expanded << " nodes\n";
                if (r.matching) out << "edges: " << edges_text(*r.matching) << '\n';
            }
            return r.found() ? exit_ok : exit_no;
        }
        if (*conj_cmd) {
            if (!is_odd_prime(o.p)) throw UsageError("--p " + std::to_string(o.p) + " is not an odd prime");
            if (o.p >= 13 && !o.long_run) throw UsageError("--p " + std::to_string(o.p) + " needs --long");
            OracleOptions oo;
            oo.parity_pruning = o.parity_pruning;
            const ConjectureReport r = check_conjecture(o.p, o.workers, oo);
            if (json) {
                out << to_json(r).dump() << '\n';
            } else {
                out << "p: " << r.p << "\nlists checked: " << r.lists_checked << "\nagrees: " << std::boolalpha
                    << r.agrees << '\n';
                for (const auto& c : r.counterexamples) out << "counterexample: {" << c.list.to_string() << "}\n";
            }
            return r.agrees ? exit_ok : exit_no;
        }
        if (*skolem_cmd) {
            if (o.n < 1) throw UsageError("--n " + std::to_string(o.n) + " must be positive");
            const SkolemSequence s = skolem_sequence(o.n);
            const Matching f = s.to_matching();
            if (json) {
                Json j = to_json(f);
                j["sequence"] = s.values();
                out << j.dump() << '\n';
            } else {
                out << "sequence:";
                for (int k : s.values()) out << ' ' << k;
                out << "\nedges: " << edges_text(f) << '\n';
            }
            return exit_ok;
        }
        if (*sweep_cmd) {
            const Order order = parse_order(o.v);
            const int max_len = o.max_len == 0 ? order.n() : o.max_len;
            if (max_len < 1 || max_len > order.n()) {
                throw UsageError("--max-len " + std::to_string(o.max_len) + " outside [1, v/2]");
            }
            OracleOptions oo;
            oo.parity_pruning = o.parity_pruning;
            sweep(enumerate_lists(order.n(), max_len), order.v(), o.workers, oo,
                  [&](const SweepRecord& r) { out << to_json(r).dump() << '\n'; });
            return exit_ok;
        }
    } catch (const UsageError& e) {
        return usage(e.what());
    } catch (const Infeasible& e) {
        if (json) {
            out << Json{{"status", "infeasible"}, {"witness", {{"condition", e.condition()}, {"detail", e.what()}}}}.dump()
                << '\n';
        } else {
            out << "status: infeasible\nwitness: " << e.condition() << " (" << e.what() << ")\n";
        }
        return exit_no;
    } catch (const InternalError& e) {
        err << "seatmatch: internal error: " << e.what() << '\n';
        if (json) out << Json{{"error", std::string("internal: ") + e.what()}}.dump() << '\n';
        return 70;
    } catch (const Error& e) {
        return usage(e.what());
    }
    return usage("no subcommand");
}

}  // namespace seatmatch::cli
