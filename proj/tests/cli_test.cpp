#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd =
        std::string(SUPERORTHO_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer{};
    size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.out.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

int count_lines(const std::string& text) {
    int lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    return lines;
}

}  // namespace

TEST_CASE("coeff subcommand") {
    RunResult r = run_cli("coeff --type 3,1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2\n");

    r = run_cli("coeff --type 4 --format json");
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["value"] == "-6");
    CHECK(doc["source"] == "closed-form");

    r = run_cli("coeff --p1 '1|2|3' --p2 1,2,3 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "value,source\n2,closed-form\n");

    CHECK(run_cli("coeff").exit_code == 2);
    CHECK(run_cli("coeff --type 0").exit_code == 2);
    CHECK(run_cli("coeff --p1 1,2 --p2 '1|2'").exit_code == 2);
}

TEST_CASE("chains subcommand") {
    RunResult r = run_cli("chains --p1 '1|2|3' --p2 1,2,3 --format json");
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["odd"] == "3");
    CHECK(doc["even"] == "1");
    CHECK(doc["d"] == "2");

    r = run_cli("chains --p1 '1|2' --p2 1,2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "odd=0 even=1 d=-1\n");

    CHECK(run_cli("chains --p1 '1|2'").exit_code == 2);
}

TEST_CASE("identity subcommand") {
    RunResult r = run_cli("identity --n 4 --L 3 --trials 5 --seed 42");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("ALL CHECKS PASSED") != std::string::npos);

    r = run_cli(
        "identity --n 3 --L 2 --p1 '1,2|3' --trials 4 --seed 7 --format json");
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["n"] == 3);
    CHECK(doc["p1"] == "1,2|3");
    CHECK(doc["trials"] == 4);
    CHECK(doc["failures"].empty());

    r = run_cli("identity --n 3 --L 2 --seed 1 --tensor --dims 2,1,2");
    CHECK(r.exit_code == 0);

    CHECK(run_cli("identity --n 4 --L 3").exit_code == 2);  // missing --seed
    CHECK(run_cli("identity --n 12 --L 3 --seed 0").exit_code == 2);
}

TEST_CASE("stirling subcommand") {
    RunResult r = run_cli("stirling --n 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, 6) == "n,k,s\n");
    CHECK(count_lines(r.out) == 11);
    CHECK(r.out.find("4,2,7\n") != std::string::npos);

    r = run_cli("stirling --n 3 --format json");
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["max_n"] == 3);
    CHECK(doc["entries"].size() == 6);

    CHECK(run_cli("stirling --n 0").exit_code == 2);
}

TEST_CASE("constants subcommand") {
    RunResult r = run_cli("constants --r 2 --format json");
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["r"] == 2);
    CHECK(doc["C"] == json::array({"9", "8", "6"}));
    CHECK(doc["exact_root"]["lo"].get<double>() ==
          doctest::Approx(3.0878356786).epsilon(1e-9));
    CHECK(doc["paper_bound"].get<double>() < 8.0);
    CHECK(doc["prior_bound"].get<double>() ==
          doctest::Approx(6.7823299831).epsilon(1e-9));

    CHECK(run_cli("constants --r 1").exit_code == 0);
    CHECK(run_cli("constants").exit_code == 2);
    CHECK(run_cli("constants --r 99").exit_code == 2);
}

TEST_CASE("sumcheck subcommand") {
    RunResult r = run_cli("sumcheck --max 59 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) == 59);  // header plus one row per m
    CHECK(r.out.find("GE1") == std::string::npos);
    CHECK(r.out.find("2,1/2,OK\n") != std::string::npos);

    r = run_cli("sumcheck --max 10 --format json");
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["all_below_one"] == true);
    CHECK(doc["rows"].size() == 9);
}

TEST_CASE("example subcommand") {
    RunResult r = run_cli("example --r 2 --s0 1 --format json");
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["ok"] == true);
    CHECK(doc["N"] == 2);
    CHECK(doc["family"].size() == 4);
    REQUIRE(doc["s_type_iv"].size() == 2);
    CHECK(doc["s_type_iv"][0]["pass"] == false);
    CHECK(doc["s_type_iv"][1]["pass"] == true);

    r = run_cli("example --r 3 --s0 2 --N 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("ALL CHECKS PASSED") != std::string::npos);

    CHECK(run_cli("example --r 2 --s0 2").exit_code == 2);
}

TEST_CASE("report subcommand") {
    RunResult r = run_cli("report --r 3");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) == 4);
    CHECK(r.out.find("2,\"9 8 6\",") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("coeff --format yaml --type 2").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}
