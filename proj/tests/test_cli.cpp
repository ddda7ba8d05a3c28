// Drives the installed binary end to end: exit-code contract, byte
// determinism, table payloads, and failure dumps.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(SUMCAT_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("tables json carries the semion data") {
    auto r = run("tables --N 1 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"twist\": [\n    \"0\",\n    \"1/2\"\n  ]") != std::string::npos);
    CHECK(r.out.find("\"schema\": 1") != std::string::npos);
}

TEST_CASE("same command and seed give identical bytes") {
    std::string cmd = "verify-completion --n 3 --trials 5 --seed 9";
    auto a = run(cmd);
    auto b = run(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    auto t1 = run("tables --N 2 --format md");
    auto t2 = run("tables --N 2 --format md");
    CHECK(t1.out == t2.out);
}

TEST_CASE("verification commands exit 0 on success") {
    CHECK(run("verify-base --N 1 --axiom pentagon").exit_code == 0);
    CHECK(run("verify-rep0 --N 2 --window 3").exit_code == 0);
    CHECK(run("verify-algebra --N 2 --d 1 --mode symbolic").exit_code == 0);
    CHECK(run("compare --N 2").exit_code == 0);
    auto rep0 = run("rep0 --N 1 --d 2 --max-label 4");
    CHECK(rep0.exit_code == 0);
    CHECK(rep0.out.find("label=1 weight=1/(2*sqrt(2)) local=false") != std::string::npos);
    CHECK(rep0.out.find("label=2 weight=2/(2*sqrt(2)) local=true") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("no-such-command").exit_code == 2);
    CHECK(run("tables --N 0").exit_code == 2);
    CHECK(run("tables --format bogus").exit_code == 2);
}

TEST_CASE("csv emission writes one file per table") {
    auto r = run("tables --N 1 --format csv --out /tmp");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("wrote /tmp/fusion.csv") != std::string::npos);
    CHECK(r.out.find("wrote /tmp/twist.csv") != std::string::npos);
}

TEST_CASE("default output directory comes from the environment") {
    REQUIRE(std::system("mkdir -p /tmp/sumcat_envdir") == 0);
    std::string cmd = "SUMCAT_OUT_DIR=/tmp/sumcat_envdir " + std::string(SUMCAT_CLI_PATH) +
                      " tables --N 1 --format csv >/dev/null 2>&1";
    CHECK(std::system(cmd.c_str()) == 0);
    CHECK(std::system("test -s /tmp/sumcat_envdir/braid.csv") == 0);
}
