#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(E6TOOL_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
    auto p = std::filesystem::temp_directory_path() /
             (name + "." + std::to_string(::getpid()) + ".json");
    std::ofstream f(p);
    f << text;
    return p;
}

}  // namespace

TEST_CASE("group-info") {
    RunResult r = run("group-info");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "**order**: 51840"));
    CHECK(contains(r.out, "| 2c | 36 | 1440 |"));
    CHECK(run("group-info --format json").exit_code == 0);
    CHECK(run("group-info --format csv").exit_code == 0);
}

TEST_CASE("chartable") {
    RunResult r = run("chartable --verify");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "**verified**: yes"));
    // row "6": dimension 6, value 4 at the 2c column
    CHECK(contains(r.out, "| 4 | 6 | 6 |"));

    RunResult csv = run("chartable --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(contains(csv.out, "chi,name,1a,"));
}

TEST_CASE("cosets command") {
    RunResult g27 = run("cosets g27");
    CHECK(g27.exit_code == 0);
    CHECK(contains(g27.out, "**index**: 27"));
    CHECK(contains(g27.out, "(6,15,10,7,6,9)"));
    CHECK(contains(g27.out, "**genus**: 46"));
    CHECK(contains(g27.out, "(33/46, 17/46, 7/46)"));

    RunResult triv = run("cosets cyclic:1a");
    CHECK(triv.exit_code == 0);
    CHECK(contains(triv.out, "**index**: 51840"));
    CHECK(contains(triv.out, "**genus**: 259201"));

    RunResult g45 = run("cosets g45");
    CHECK(g45.exit_code == 0);
    CHECK(contains(g45.out, "**genus**: 136"));

    CHECK(run("cosets g27 --format json").exit_code == 0);
    CHECK(run("cosets nonsense").exit_code == 2);
    CHECK(run("cosets cyclic:99x").exit_code == 2);
}

TEST_CASE("table1 command") {
    RunResult r = run("table1 --check");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "**check**: pass"));
    CHECK(contains(r.out, "**det_mult_matrix**: 400771988324352"));
    CHECK(contains(r.out, "| 20 | 60b | 240 | 275/92 | 114/23 | 181/92 | 25 | 28 | 21 |"));
    CHECK(contains(r.out, "| 1 | 1 | 0 | 0 | 0 | 0 | 0 | 0 | 0 |"));
    CHECK(run("table1 --format csv").exit_code == 0);
}

TEST_CASE("glued commands") {
    RunResult b = run("glued build --spec default");
    CHECK(b.exit_code == 0);
    CHECK(contains(b.out, "**nodes**: 72"));
    CHECK(contains(b.out, "**connected**: yes"));
    CHECK(contains(b.out, "**monodromy_full**: yes"));

    RunResult v = run("glued verify --spec default");
    CHECK(v.exit_code == 0);
    CHECK(contains(v.out, "**all_pass**: yes"));
    CHECK(contains(v.out, "**h0_L**: 2"));
    CHECK(contains(v.out, "**h0_omega**: 46"));
    CHECK(contains(v.out, "**h0_omega_minus_L**: 20"));
    CHECK(contains(v.out, "**h0_2omega_minus_5L**: 0"));
}

TEST_CASE("glued error paths") {
    auto dup = write_temp("dup", R"([{"root":"a12","point":"1"},{"root":"a23","point":"1"}])");
    CHECK(run("glued verify --spec " + dup.string()).exit_code == 2);
    std::filesystem::remove(dup);

    auto weak = write_temp("weak", R"([{"root":"a12","point":"1"},{"root":"a12","point":"2"}])");
    RunResult r = run("glued verify --spec " + weak.string());
    CHECK(r.exit_code == 1);
    CHECK(contains(r.out, "refused"));
    std::filesystem::remove(weak);

    auto garbage = write_temp("garbage", "{{{");
    CHECK(run("glued verify --spec " + garbage.string()).exit_code == 2);
    std::filesystem::remove(garbage);

    CHECK(run("glued verify --spec /nonexistent/file.json").exit_code == 2);
    CHECK(run("glued").exit_code == 2);          // missing subcommand
    CHECK(run("unknown-subcommand").exit_code == 2);
}

TEST_CASE("byte-identical reruns") {
    for (const char* cmd :
         {"group-info --format json", "table1 --format csv", "cosets g36 --format json",
          "chartable --format markdown"}) {
        RunResult a = run(cmd);
        RunResult b = run(cmd);
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
}
