// End-to-end checks of the installed command-line tool. The binary path and
// the shipped data directory come in through compile definitions.
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(EPIPROB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult res;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string data_file(const std::string& name) {
    return std::string(EPIPROB_DATA_DIR) + "/" + name;
}

// The scenario subcommand writes a system file used by the other checks.
std::string scenario_file(const std::string& name, const std::string& extra = "") {
    const std::string path = "cli_scenario_" + name + ".json";
    const CliResult res = run_cli("scenario " + name + " " + extra + " > " + path);
    REQUIRE(res.exit_code == 0);
    return path;
}

}  // namespace

TEST_CASE("validate accepts every emitted scenario") {
    for (const std::string name :
         {"sleeping-beauty", "sleeping-beauty-learning", "two-coins", "prisoner-clocks",
          "prisoner-clocks-sync", "forgetful-coin"}) {
        const std::string path = scenario_file(name);
        const CliResult res = run_cli("validate " + path);
        CHECK(res.exit_code == 0);
        CHECK(res.out.find("\"ok\": true") != std::string::npos);
    }
}

TEST_CASE("assignment output is exact and method-dependent") {
    const std::string path = scenario_file("sleeping-beauty");
    const CliResult elga = run_cli("assign --method elga --point r1@1 " + path);
    CHECK(elga.exit_code == 0);
    CHECK(elga.out.find("\"r1@1\": \"1/3\"") != std::string::npos);
    CHECK(elga.out.find("\"r2@2\": \"1/3\"") != std::string::npos);

    const CliResult htu = run_cli("assign --method ht-uniform --point r1@1 " + path);
    CHECK(htu.out.find("\"r1@1\": \"1/2\"") != std::string::npos);
    CHECK(htu.out.find("\"r2@1\": \"1/4\"") != std::string::npos);
}

TEST_CASE("exit codes separate audit violations from input errors") {
    const std::string path = scenario_file("sleeping-beauty");
    CHECK(run_cli("condition --method elga " + path).exit_code == 1);
    CHECK(run_cli("condition --method ht " + path).exit_code == 0);
    CHECK(run_cli("reflect --time 1 --event r1 --method elga " + path).exit_code == 1);
    CHECK(run_cli("reflect --time 1 --event r1 --method ht " + path).exit_code == 0);

    CHECK(run_cli("validate /no/such/file.json").exit_code == 2);
    CHECK(run_cli("assign --method bogus --point r1@1 " + path).exit_code == 2);
    CHECK(run_cli("assign --method elga --point r9@1 " + path).exit_code == 2);
    CHECK(run_cli("check --property bogus " + path).exit_code == 2);
    CHECK(run_cli("no-such-subcommand").exit_code == 2);
    CHECK(run_cli("sim --event r1 --state w --trials 0 " + path).exit_code == 2);
    CHECK(run_cli("bet --book /no/such/book.json --method ht " + path).exit_code == 2);
}

TEST_CASE("property checks report and exit by outcome") {
    const std::string sb = scenario_file("sleeping-beauty");
    CHECK(run_cli("check --property sync " + sb).exit_code == 1);
    CHECK(run_cli("check --property recall " + sb).exit_code == 0);
    CHECK(run_cli("check --property refinement " + sb).exit_code == 0);

    const std::string fc = scenario_file("forgetful-coin");
    CHECK(run_cli("check --property sync " + fc).exit_code == 0);
    CHECK(run_cli("check --property recall " + fc).exit_code == 1);
    const CliResult refine = run_cli("check --property refinement " + fc);
    CHECK(refine.exit_code == 1);
    CHECK(refine.out.find("rH@2") != std::string::npos);
}

TEST_CASE("multi-agent systems need the agent flag only when ambiguous") {
    const std::string tc = scenario_file("two-coins");
    CHECK(run_cli("infosets " + tc).exit_code == 2);
    CHECK(run_cli("infosets --agent alice " + tc).exit_code == 0);
    CHECK(run_cli("infosets --agent carol " + tc).exit_code == 2);
    CHECK(run_cli("condition --agent bob --method ht " + tc).exit_code == 0);
}

TEST_CASE("the shipped bet books trap exactly their targeted rules") {
    const std::string sb = scenario_file("sleeping-beauty");
    const CliResult half_u =
        run_cli("bet --book " + data_file("dutchbook_half.json") + " --method ht-uniform " + sb);
    CHECK(half_u.exit_code == 1);
    CHECK(half_u.out.find("\"sure_loss\": true") != std::string::npos);
    CHECK(half_u.out.find("\"r1\": \"-5/1\"") != std::string::npos);

    const CliResult half_e =
        run_cli("bet --book " + data_file("dutchbook_half.json") + " --method elga " + sb);
    CHECK(half_e.exit_code == 0);
    CHECK(half_e.out.find("\"sure_loss\": false") != std::string::npos);

    const CliResult third_e =
        run_cli("bet --book " + data_file("dutchbook_third.json") + " --method elga " + sb);
    CHECK(third_e.exit_code == 1);
    CHECK(third_e.out.find("\"sure_loss\": true") != std::string::npos);
}

TEST_CASE("identical invocations are byte-identical, sharded or not") {
    const std::string sb = scenario_file("sleeping-beauty");
    const std::string cmd = "sim --event r1 --state w --trials 20000 --seed 5 " + sb;
    const CliResult a = run_cli(cmd);
    const CliResult b = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    const CliResult sharded = run_cli(cmd + " --shards 13");
    CHECK(sharded.out == a.out);

    const CliResult reflected = run_cli("reflect --time 11 " + scenario_file("prisoner-clocks"));
    const CliResult reflected2 = run_cli("reflect --time 11 cli_scenario_prisoner-clocks.json");
    CHECK(reflected.out == reflected2.out);
}

TEST_CASE("the environment seed fills in when no flag is given") {
    const std::string sb = scenario_file("sleeping-beauty");
    const std::string base = " sim --event r1 --state w --trials 500 " + sb;
    const std::string cmd = std::string("EPIPROB_SEED=123 ") + EPIPROB_CLI_PATH + base;

    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    pclose(pipe);
    CHECK(out.find("\"seed\": 123") != std::string::npos);

    // An explicit flag wins over the environment.
    FILE* pipe2 = popen((std::string("EPIPROB_SEED=123 ") + EPIPROB_CLI_PATH +
                         " sim --event r1 --state w --trials 500 --seed 9 " + sb +
                         " 2>/dev/null")
                            .c_str(),
                        "r");
    REQUIRE(pipe2 != nullptr);
    std::string out2;
    while ((n = fread(buf.data(), 1, buf.size(), pipe2)) > 0) out2.append(buf.data(), n);
    pclose(pipe2);
    CHECK(out2.find("\"seed\": 9") != std::string::npos);
}

TEST_CASE("the unknown-toss-time example file loads and wakes at a third") {
    const std::string path = data_file("unknown_toss_time.json");
    CHECK(run_cli("validate " + path).exit_code == 0);
    // Four runs, heads on half of them; the waking set at a fair third.
    const CliResult elga = run_cli("assign --method elga --point r1@1 " + path);
    CHECK(elga.exit_code == 0);
    CHECK(elga.out.find("\"r1@1\": \"1/6\"") != std::string::npos);
}
