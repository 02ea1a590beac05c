// Black-box tests of the command-line binary. The binary path comes
// from the PPTOWER_CLI environment variable set by CTest.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    const char* bin = std::getenv("PPTOWER_CLI");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("alpha csv output") {
    auto r = run("alpha -k 2 -r 3 -n 3");
    CHECK(r.code == 0);
    CHECK(r.out == "n,alpha\n0,1\n1,2\n2,6\n3,13\n");
}

TEST_CASE("alpha methods agree") {
    auto base = run("alpha -k 3 -r 2 -n 6");
    for (const char* m : {"genfun", "zetapoly"}) {
        auto r = run(std::string("alpha -k 3 -r 2 -n 6 --method ") + m);
        CHECK(r.code == 0);
        CHECK(r.out == base.out);
    }
}

TEST_CASE("alpha unbounded rank via r=0") {
    auto r = run("alpha -k 2 -r 0 -n 4");
    CHECK(r.code == 0);
    CHECK(r.out == "n,alpha\n0,1\n1,2\n2,6\n3,13\n4,30\n");
}

TEST_CASE("json format") {
    auto r = run("--format json alpha -k 1 -r 1 -n 2");
    CHECK(r.code == 0);
    CHECK(r.out == "[{\"alpha\":\"1\",\"n\":0},{\"alpha\":\"1\",\"n\":1},{\"alpha\":\"1\",\"n\":2}]\n");
}

TEST_CASE("byte-identical reruns") {
    for (const char* cmd :
         {"alpha -k 3 -r 3 -n 8", "--format json genfun -k 2 -r 3", "beta -k 2 -r 0 -M 10",
          "figure-data --kmax 2 --nmax 15"}) {
        auto a = run(cmd);
        auto b = run(cmd);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("genfun output and functional-equation verdict") {
    auto r = run("--format json genfun -k 3 -r 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"funceq\":true") != std::string::npos);
    CHECK(r.out.find("[\"1\",\"2\",\"4\",\"2\",\"1\"]") != std::string::npos);
}

TEST_CASE("guards refuse oversized requests") {
    CHECK(run("genfun -k 4 -r 4").code == 1);
    CHECK(run("syt -k 5 -r 3").code == 1);
    CHECK(run("figure-data --kmax 3 --nmax 30").code == 1);
    CHECK(run("towers -k 1 -r 0 -N 20000000").code == 1);
    CHECK(run("alpha -k 2 -r 3 -n 30 --method enumerate").code == 1);
}

TEST_CASE("syt count") {
    auto r = run("syt -k 2 -r 3");
    CHECK(r.code == 0);
    CHECK(r.out.substr(0, 8) == "count,5\n");
}

TEST_CASE("alpha-poly prints exact rationals") {
    auto r = run("alpha-poly -n 3 -r 0");
    CHECK(r.code == 0);
    // n=3: k(k+1)(4k+5)/6
    CHECK(r.out == "degree,coefficient\n0,0\n1,5/6\n2,3/2\n3,2/3\n");
}

TEST_CASE("beta values") {
    auto r = run("beta -k 2 -r 0 -M 5");
    CHECK(r.code == 0);
    CHECK(r.out == "m,beta\n1,2\n2,3\n3,3\n4,4\n5,2\n");
}

TEST_CASE("towers report shape") {
    auto r = run("towers -k 1 -r 1 -N 1000");
    CHECK(r.code == 0);
    CHECK(r.out.substr(0, 12) == "N,sum,ratio\n");
    // 16,32,...,512 then 1000
    CHECK(r.out.find("\n1000,") != std::string::npos);
}

TEST_CASE("selftest passes") {
    auto r = run("selftest");
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("unknown arguments exit nonzero") {
    CHECK(run("alpha -k 0 -r 1").code != 0);
    CHECK(run("nonsense").code != 0);
}
