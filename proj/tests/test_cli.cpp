#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "seatmatch/cli.hpp"
#include "seatmatch/json_io.hpp"

using namespace seatmatch;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "seatmatch");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

Json json_of(const Run& r) {
    REQUIRE_FALSE(r.out.empty());
    return Json::parse(r.out);
}

}  // namespace

TEST_CASE("solve the uniform example") {
    const Run r = run({"solve", "--v", "24", "--list", "9^12"});
    CHECK(r.code == cli::exit_ok);
    const Json j = json_of(r);
    CHECK(j["route"] == "prop-uniform");
    CHECK(j["status"] == "feasible");
    CHECK(j["verified"] == true);
    CHECK(j["edges"].size() == 12);
}

TEST_CASE("decide reports a projection witness") {
    const Run r = run({"decide", "--v", "20", "--list", "4^3,6^7"});
    CHECK(r.code == cli::exit_no);
    const Json j = json_of(r);
    CHECK(j["status"] == "infeasible");
    CHECK(j["witness"]["condition"] == "projection");
}

TEST_CASE("conjecture at p = 5") {
    const Run r = run({"conjecture", "--p", "5"});
    CHECK(r.code == cli::exit_ok);
    const Json j = json_of(r);
    CHECK(j["agrees"] == true);
    CHECK(j["lists_checked"] == 56);
    CHECK(run({"conjecture", "--p", "9"}).code == cli::exit_usage);
    CHECK(run({"conjecture", "--p", "13"}).code == cli::exit_usage);
}

TEST_CASE("exit codes") {
    CHECK(run({"decide", "--v", "8", "--list", "2,3^2,4"}).code == cli::exit_unknown);
    CHECK(run({"solve", "--v", "8", "--list", "2,3^2,4", "--no-oracle"}).code == cli::exit_unknown);
    CHECK(run({"solve", "--v", "8", "--list", "2,3^2,4"}).code != cli::exit_unknown);
    CHECK(run({"solve", "--v", "12", "--list", "1,2,3,4,5,6"}).code == cli::exit_no);
    CHECK(run({"oracle", "--v", "20", "--list", "4^3,6^7"}).code == cli::exit_no);
    CHECK(run({"oracle", "--v", "7", "--list", "1,2,3"}).code == cli::exit_ok);
    CHECK(run({"skolem", "--n", "5"}).code == cli::exit_ok);
    CHECK(run({"skolem", "--n", "6"}).code == cli::exit_no);
}

TEST_CASE("usage errors name the offending token") {
    auto check_usage = [](const std::vector<std::string>& args, const std::string& token) {
        const Run r = run(args);
        CHECK(r.code == cli::exit_usage);
        CHECK(r.err.find(token) != std::string::npos);
        const Json j = json_of(r);
        CHECK(j["exit"] == 64);
        CHECK(j["error"].get<std::string>().find(token) != std::string::npos);
    };
    check_usage({"solve", "--v", "8", "--list", "1,x^2,3"}, "x^2");
    check_usage({"solve", "--v", "9", "--list", "1^4"}, "9");
    check_usage({"solve", "--v", "8", "--list", "1^4", "--oracle-threshold", "7"}, "7");
    check_usage({"bogus"}, "bogus");
    check_usage({"solve", "--v", "8", "--lst", "1^4"}, "--lst");
    check_usage({"decide", "--v", "8", "--list", "1^3"}, "1^3");

    const Run text = run({"solve", "--v", "8", "--list", "1,x", "--format", "text"});
    CHECK(text.code == cli::exit_usage);
    CHECK(text.out.empty());
}

TEST_CASE("solve output verifies") {
    const std::string path = "cli_roundtrip_matching.json";
    for (const auto& [v, list] : {std::pair{"18", "1^5,7^4"}, std::pair{"84", "15^25,35^17"},
                                  std::pair{"56", "1^4,2^4,3^4,4^4,5^4,6^4,7^4"},
                                  std::pair{"8", "2,3^2,4"}}) {
        const Run s = run({"solve", "--v", v, "--list", list});
        REQUIRE(s.code == cli::exit_ok);
        std::ofstream(path) << s.out;
        const Run check = run({"verify", "--input", path, "--list", list});
        CHECK(check.code == cli::exit_ok);
        CHECK(json_of(check)["ok"] == true);
    }
    std::ofstream(path) << R"({"v":4,"edges":[[0,1],[2,3]]})";
    const Run wrong = run({"verify", "--input", path, "--list", "2^2"});
    CHECK(wrong.code == cli::exit_no);
    CHECK(json_of(wrong)["ok"] == false);
    CHECK(json_of(wrong)["diagnostic"] == "length multiset mismatch");
    std::ofstream(path) << "not json";
    CHECK(run({"verify", "--input", path, "--list", "2^2"}).code == cli::exit_usage);
    std::remove(path.c_str());
    CHECK(run({"verify", "--input", "no/such/file.json", "--list", "2^2"}).code == cli::exit_usage);
}

TEST_CASE("json output is valid on every path") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"solve", "--v", "24", "--list", "9^12"},
             {"solve", "--v", "20", "--list", "4^3,6^7"},
             {"solve", "--v", "8", "--list", "2,3^2,4", "--no-oracle"},
             {"decide", "--v", "10", "--list", "1,2,3,4,5"},
             {"oracle", "--v", "10", "--list", "1,2,3,4,5", "--no-symmetry"},
             {"oracle", "--v", "14", "--list", "1^3,2,3^2,5", "--parity-pruning"},
             {"conjecture", "--p", "3", "--workers", "2"},
             {"skolem", "--n", "8"},
             {"skolem", "--n", "7"},
             {"solve"},
             {"solve", "--v", "x"}}) {
        const Run r = run(args);
        INFO(args.front() << " -> " << r.out);
        CHECK_NOTHROW(Json::parse(r.out));
    }
}

TEST_CASE("sweep streams one record per list") {
    const Run r = run({"sweep", "--v", "8", "--workers", "2"});
    CHECK(r.code == cli::exit_ok);
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        const Json j = Json::parse(line);
        CHECK(j.contains("list"));
        CHECK(j.contains("status"));
        CHECK(j.contains("nodes"));
        CHECK(j.contains("millis"));
        ++count;
    }
    CHECK(count == 35);
}

TEST_CASE("text format") {
    const Run r = run({"solve", "--v", "4", "--list", "2^2", "--format", "text"});
    CHECK(r.code == cli::exit_ok);
    CHECK(r.out.find("status: feasible") != std::string::npos);
    CHECK(r.out.find("route:") != std::string::npos);
}
