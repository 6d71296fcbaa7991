// End-to-end command-line checks: exit codes are the contract (0 success or
// verified, 1 refuted, 2 usage, 3 divergence or internal inconsistency), and
// the emitted text or JSON must be parseable.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#ifndef MDSERIES_CLI_PATH
#error "MDSERIES_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(MDSERIES_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("verified claims exit zero") {
    RunResult r = run("verify master --order 5");
    CHECK(r.code == 0);
    CHECK(r.out.find("status: verified") != std::string::npos);
    CHECK(r.out.find("finite-order evidence only") != std::string::npos);
}

TEST_CASE("refuted claims exit one with a witness") {
    RunResult r = run("verify master --order 5 --perturb 3:1");
    CHECK(r.code == 1);
    CHECK(r.out.find("status: refuted") != std::string::npos);
    CHECK(r.out.find("witness at k=3") != std::string::npos);

    RunResult p3 = run("verify part3 --order 5 --perturb 2:1");
    CHECK(p3.code == 1);
}

TEST_CASE("usage problems exit two") {
    CHECK(run("verify master --order 1").code == 2);          // order below two
    CHECK(run("nonsense").code == 2);                         // unknown command
    CHECK(run("verify").code == 2);                           // missing subcommand
    CHECK(run("verify master --order 5 --perturb 0:1").code == 2);
    CHECK(run("verify master --order 5 --perturb banana").code == 2);
    CHECK(run("verify master --order 5 --format yaml").code == 2);
    CHECK(run("verify triangularity --order 4 --perturb 2:1").code == 2);
    CHECK(run("coeffs first --order 4 --b-file /nonexistent").code == 2);
    CHECK(run("eval lambda --order 4 --b-file catalan --p 1/10").code == 2); // missing --d
    CHECK(run("eval lambda --order 4 --b-file catalan --d 3 --p 1").code == 2);
    CHECK(run("eval lambda --order 4 --b-file catalan --d 1/2 --p 1/3").code == 2);
    CHECK(run("eval lambda --order 4 --d 3 --p 1/10").code == 2); // missing --b-file
    CHECK(run("transform jbar-from-b --order 4 --perturb 2:1").code == 2);
}

TEST_CASE("help exits zero") {
    CHECK(run("--help").code == 0);
    CHECK(run("verify --help").code == 0);
}

TEST_CASE("coefficient tables in all three formats") {
    RunResult text = run("transform jbar-from-b --order 4");
    CHECK(text.code == 0);
    CHECK(text.out.find("J_2 = 1/4*d^-2*b_2 + 1/2") != std::string::npos);

    RunResult latex = run("transform jbar-from-b --order 4 --format latex");
    CHECK(latex.code == 0);
    CHECK(latex.out.find("\\bar{J}_{2} = ") != std::string::npos);

    RunResult js = run("coeffs second --order 4 --format json");
    CHECK(js.code == 0);
    nlohmann::json r = nlohmann::json::parse(js.out);
    CHECK(r["schema"] == "mdseries-report/v1");
    CHECK(r["command"] == "coeffs-second");
    CHECK(r["order"] == 4);
    CHECK(r["tables"].size() == 3);
}

TEST_CASE("json verdicts parse and carry the schema") {
    RunResult r = run("verify part3 --order 6 --format json");
    CHECK(r.code == 0);
    nlohmann::json v = nlohmann::json::parse(r.out);
    CHECK(v["schema"] == "mdseries-report/v1");
    CHECK(v["claim"] == "catalan-part3");
    CHECK(v["status"] == "verified");
    CHECK_FALSE(v.contains("witness"));

    RunResult both = run("verify catalan --order 8 --format json");
    CHECK(both.code == 0);
    nlohmann::json arr = nlohmann::json::parse(both.out);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 2);
    CHECK(arr[0]["claim"] == "catalan-part1");
    CHECK(arr[1]["claim"] == "catalan-part2");

    RunResult refuted = run("verify catalan --order 6 --perturb 3:1 --format json");
    CHECK(refuted.code == 1);
    nlohmann::json rarr = nlohmann::json::parse(refuted.out);
    CHECK(rarr[0]["status"] == "refuted");
    CHECK(rarr[0]["witness"]["k"] == 3);
}

TEST_CASE("b-sequence files drive the numeric and table commands") {
    std::string path = "cli_b_file_test.txt";
    {
        std::ofstream f(path);
        f << "# quadratic and cubic couplings only\n";
        f << "2 -2\n";
        f << "3 20/3\n";
        f << "9 1   # beyond the order: ignored\n";
    }
    RunResult r = run("transform jbar-from-b --order 3 --b-file " + path);
    CHECK(r.code == 0);
    // file values are plain rationals: b_2 = -2 gives 1/2 - (1/2) d^-2
    CHECK(r.out.find("J_2 = -1/2*d^-2 + 1/2") != std::string::npos);
    CHECK(r.out.find("J_3 = 5/6*d^-3 - 2*d^-2 + 7/6") != std::string::npos);

    std::ofstream(path) << "1 5\n";
    CHECK(run("transform jbar-from-b --order 3 --b-file " + path).code == 2);
    std::ofstream(path) << "2 oops\n";
    CHECK(run("transform jbar-from-b --order 3 --b-file " + path).code == 2);
    std::remove(path.c_str());
}

TEST_CASE("numeric evaluation through the binary") {
    RunResult r = run("eval lambda --d 3 --p 1/10 --order 8 --b-file catalan --format json");
    CHECK(r.code == 0);
    nlohmann::json v = nlohmann::json::parse(r.out);
    CHECK(v["q2First"] == "0");
    CHECK(v["q2Second"] == "0");
    CHECK(v["lambdaFirst"] == "0.24954169220314870534627432340863484249171294472554");
    CHECK(v["lambdaFirst"] == v["lambdaSecond"]);
    CHECK(v["precision"] == 50);

    RunResult text = run("eval lambda --d 3 --p 1/10 --order 4 --b-file catalan --precision 20");
    CHECK(text.code == 0);
    CHECK(text.out.find("lambdaFirst:  0.24954169220314870535") != std::string::npos);
}
