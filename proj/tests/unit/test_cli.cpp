#include "support/cli_cases.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

// Golden tests: every worked example, byte-identical through the binary.
// Regenerate the expected files with CHIPFIRE_REGEN=1 after a reviewed
// output change; the files are checked in.

namespace {

const std::string kCli = CHIPFIRE_CLI_PATH;
const std::string kFixtures = CHIPFIRE_FIXTURES_DIR;

std::string fx(const std::string& name) { return kFixtures + "/" + name; }

int run_cli(const std::string& args, std::string& out, bool capture_stderr = false) {
    const std::string cmd =
        kCli + " " + args + (capture_stderr ? " 2>&1 1>/dev/null" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    out.clear();
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace

TEST_CASE("golden outputs are byte-identical for fixed inputs and flags") {
    for (const auto& c : chipfire::testing::golden_cases(kFixtures)) {
        INFO("case " << c.name << ": " << c.args);
        std::string out;
        CHECK(run_cli(c.args, out) == c.exit_code);

        const std::string path = kFixtures + "/golden/" + c.name + ".txt";
        if (std::getenv("CHIPFIRE_REGEN")) {
            std::ofstream f(path, std::ios::binary);
            REQUIRE(f.good());
            f << out;
            continue;
        }
        std::ifstream f(path, std::ios::binary);
        REQUIRE_MESSAGE(f.good(), "missing golden file " << path);
        std::ostringstream want;
        want << f.rdbuf();
        CHECK(want.str() == out);
    }
}

TEST_CASE("repeated runs emit the same bytes") {
    const std::string args =
        "canonical --graph " + fx("graph_line.json") + " --config " + fx("config_00.txt") +
        " --kind critical --json";
    std::string first, second;
    CHECK(run_cli(args, first) == 0);
    CHECK(run_cli(args, second) == 0);
    CHECK(first == second);
    CHECK_FALSE(first.empty());
}

TEST_CASE("exit codes separate the failure classes") {
    std::string err;

    CHECK(run_cli("--help", err) == 0);
    CHECK(run_cli("", err, true) == 2);                                        // no subcommand
    CHECK(run_cli("stabilize --matrix " + fx("delta_a.txt"), err, true) == 2); // missing --config
    CHECK(run_cli("check --matrix a --graph b", err, true) == 2);              // exclusive sources
    CHECK(run_cli("check --bogus", err, true) == 2);
    CHECK(run_cli("enumerate --matrix " + fx("delta_a.txt") + " --kind q", err, true) == 2);
    CHECK(err.find("error: usage:") != std::string::npos);
    CHECK(run_cli("check", err, true) == 2); // neither source given
    CHECK(err.find("--matrix or --graph") != std::string::npos);

    CHECK(run_cli("stabilize --matrix " + fx("delta_notm.txt") + " --config " +
                      fx("config_00.txt"),
                  err, true) == 3);
    CHECK(err.find("error: not_m_matrix:") != std::string::npos);

    CHECK(run_cli("superstable --matrix " + fx("delta_id2.txt") + " --config " +
                      fx("config_big.txt"),
                  err, true) == 4);
    CHECK(err.find("error: search_too_large:") != std::string::npos);

    CHECK(run_cli("check --matrix /nonexistent/chipfire.mat", err, true) == 5);
    CHECK(err.find("error: parse_error:") != std::string::npos);
    CHECK(run_cli("laplacian --graph " + fx("bad_graph.txt"), err, true) == 5);
    CHECK(err.find("self-loops") != std::string::npos);

    CHECK(run_cli("superstable --matrix " + fx("delta_a.txt") + " --config " +
                      fx("config_neg.txt"),
                  err, true) == 1);
    CHECK(err.find("error: negative_input:") != std::string::npos);
}

TEST_CASE("the orientation banner goes to the error stream only") {
    std::string out, err;
    CHECK(run_cli("dual --graph " + fx("graph_line.json") + " --config " + fx("config_00.txt"),
                  out) == 0);
    CHECK(out == "2 1\n");
    run_cli("dual --graph " + fx("graph_line.json") + " --config " + fx("config_00.txt"), err,
            true);
    CHECK(err.find("firing subtracts rows of") != std::string::npos);
}
