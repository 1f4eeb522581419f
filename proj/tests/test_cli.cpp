#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "schenker/natural.hpp"
#include "schenker/sums.hpp"

// Drives the installed binary end to end.  The path is injected by the build.
#ifndef SCHENKER_CLI_PATH
#error "SCHENKER_CLI_PATH must be defined by the build system"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(SCHENKER_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string trimmed(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == ' '))
        s.pop_back();
    return s;
}

} // namespace

TEST_SUITE("cli") {
    TEST_CASE("bare text outputs match the library") {
        CHECK(trimmed(run_cli("sum 7").out) == "3309110");
        CHECK(trimmed(run_cli("sum 16").out) ==
              schenker::to_decimal(schenker::schenker_exact(16)));
        CHECK(trimmed(run_cli("mod 25 1369").out) == "851");
        CHECK(trimmed(run_cli("q 2 5").out) == "15 (mod 25)");
        CHECK(trimmed(run_cli("val 37 26 --cap 10").out) == "0");
        CHECK(trimmed(run_cli("val 37 25").out) == "1");
        CHECK(trimmed(run_cli("roots 37").out) == "25");
        CHECK(trimmed(run_cli("roots 41").out) == "7 18");
        CHECK(trimmed(run_cli("anomalies 100").out) == "2 1\n37 25");
    }

    TEST_CASE("exit codes") {
        CHECK(run_cli("sum 7").exit_code == 0);
        CHECK(run_cli("sum").exit_code == 2);          // missing argument
        CHECK(run_cli("sum 0").exit_code == 2);        // invalid index
        CHECK(run_cli("sum 99999").exit_code == 2);    // above the cap
        CHECK(run_cli("mod 5 1").exit_code == 2);      // modulus too small
        CHECK(run_cli("mod x 7").exit_code == 2);      // not a number
        CHECK(run_cli("q 5 5").exit_code == 2);        // shared factor
        CHECK(run_cli("roots 6").exit_code == 2);      // not prime
        CHECK(run_cli("lift 5 3 4").exit_code == 2);   // 5 does not divide a_3
        CHECK(run_cli("nonsense").exit_code == 2);     // unknown subcommand
        CHECK(run_cli("--help").exit_code == 0);
    }

    TEST_CASE("json records carry command, inputs, result, and timing") {
        RunResult r = run_cli("sum 16 --format json");
        REQUIRE(r.exit_code == 0);
        nlohmann::json record = nlohmann::json::parse(r.out);
        CHECK(record.at("command") == "sum");
        CHECK(record.at("inputs").at("n") == 16);
        CHECK(record.at("result") == "105224992014096760832");
        CHECK(record.at("elapsed_ms").is_number());

        nlohmann::json lift = nlohmann::json::parse(run_cli("lift 5 2 6 --format json").out);
        CHECK(lift.at("result").at("status") == "completed");
        REQUIRE(lift.at("result").at("entries").size() == 6);
        CHECK(lift.at("result").at("entries")[5].at("n") == "15512");
        CHECK(lift.at("result").at("entries")[5].at("modulus") == "15625");

        nlohmann::json prof = nlohmann::json::parse(run_cli("profile 5 --format json").out);
        CHECK(prof.at("result").at("lambda") == 1);
        CHECK(prof.at("result").at("roots") == nlohmann::json::array({2}));

        nlohmann::json val = nlohmann::json::parse(run_cli("val 5 2 --cap 1 --format json").out);
        CHECK(val.at("result").at("kind") == "at_least");
        CHECK(val.at("result").at("value") == "1");
    }

    TEST_CASE("csv output for scans is one row per prime") {
        RunResult r = run_cli("scan 2 50 --workers 2 --format csv");
        REQUIRE(r.exit_code == 0);
        std::string expect_header = "p,lambda,roots,anomalous_roots,is_schenker";
        CHECK(r.out.rfind(expect_header, 0) == 0);
        CHECK(r.out.find("\n41,2,7;18,,true\n") != std::string::npos);
        CHECK(r.out.find("\n3,0,,,false\n") != std::string::npos);
        CHECK(r.out.find("\n37,1,25,25,true\n") != std::string::npos);
        // 15 primes + header
        CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 16);
    }

    TEST_CASE("text lift output walks the levels") {
        RunResult r = run_cli("lift 37 25 4");
        REQUIRE(r.exit_code == 0);
        CHECK(r.out == "level 1: 25 (mod 37)\nstatus: stopped_none\n");
    }

    TEST_CASE("table output groups by root count") {
        RunResult r = run_cli("table1 --workers 4");
        REQUIRE(r.exit_code == 0);
        CHECK(r.out.find("lambda | p") != std::string::npos);
        CHECK(r.out.find("5      | 593") != std::string::npos);
        CHECK(r.out.find("4      | ---") != std::string::npos);
    }

    TEST_CASE("single acceptance criterion through the cli") {
        RunResult r = run_cli("verify --criterion 1");
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("criterion 1 PASS") != std::string::npos);
        CHECK(r.out.find("all criteria passed") != std::string::npos);
    }
}
