#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "zetamill/identities.hpp"

#ifndef ZETAMILL_BIN
#error "ZETAMILL_BIN must point at the CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(ZETAMILL_BIN) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("verify id 1 exits zero and reports enough digits") {
    RunResult r = run("verify --id 1 --digits 40");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("verdict=pass") != std::string::npos);
}

TEST_CASE("json output is deterministic and round-trips") {
    RunResult a = run("--format json verify --id 1 --digits 30");
    RunResult b = run("--format json verify --id 1 --digits 30");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    std::string line = a.out.substr(0, a.out.find('\n'));
    zetamill::IdentityReport parsed = zetamill::report_from_json(line);
    CHECK(zetamill::report_to_json(parsed) == line);
    CHECK(parsed.verdict);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("verify --no-such-flag").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("zeros --digits 10").exit_code == 2);        // neither --upto nor --count
    CHECK(run("verify --digits 0").exit_code == 2);
}

TEST_CASE("missing cache for an even identity exits 3 with a hint") {
    std::string cmd = std::string(ZETAMILL_BIN) +
                      " verify --id 2 --digits 5 --cache no_such_cache.zc 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 3);
    CHECK(out.find("zeros") != std::string::npos);
}

TEST_CASE("constants subcommand prints the four constants") {
    RunResult r = run("constants --digits 30");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("0.577215664901532860606512090082") != std::string::npos);
    CHECK(r.out.find("0.915965594177219015054603514932") != std::string::npos);
    CHECK(r.out.find("3.14159265358979323846264338328") != std::string::npos);
    CHECK(r.out.find("0.693147180559945309417232121458") != std::string::npos);
}

TEST_CASE("gram subcommand") {
    RunResult r = run("gram --x 100 --digits 20");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("25.661633266") != std::string::npos);
}

TEST_CASE("zeros subcommand writes a loadable cache honoring ZETAMILL_CACHE") {
    std::string path = "cli_env_cache_test.zc";
    std::string cmd = "ZETAMILL_CACHE=" + path + " " + std::string(ZETAMILL_BIN) +
                      " zeros --upto 22 --digits 15 2>/dev/null";
    int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 0);
    zetamill::ZeroCache cache = zetamill::cache_load(path);
    CHECK(cache.records.size() == 2);
    CHECK(cache.digits == 15);
    std::remove(path.c_str());
}
