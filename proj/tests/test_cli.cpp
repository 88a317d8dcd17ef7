#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("QHOPF_CLI");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 256> buf;
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("qchar") {
    RunResult r = run_cli("qchar --shape 1,1 --n 0 --N 2");
    CHECK(r.code == 0);
    CHECK(r.out == "L[1,0]*L[2,-1]\n");
}

TEST_CASE("frobenius closed formula") {
    RunResult r = run_cli("frobenius --l 2 --i 1");
    CHECK(r.code == 0);
    CHECK(r.out == "t[1,0]*t[1,1] - t[2,0] - t[2,1]\n");
}

TEST_CASE("pbw and res") {
    CHECK(run_cli("pbw --eval [2] --n 0 --N 2").out == "t[1,0]*t[1,1] - t[2,1]\n");
    CHECK(run_cli("res --expr t[2,2] --m 1").out == "t[1,2]\n");
    CHECK(run_cli("res --expr 't[1,0]^2' --m 0").out == "2*t[1,0]\n");
    CHECK(run_cli("antipode --expr t[2,0]").out == "t[1,0]*t[1,-1] - t[2,0]\n");
}

TEST_CASE("hall subcommands") {
    CHECK(run_cli("hall --quiver cyclic:1 mul --a '{(0:0)}' --b '{(0:0)}'").out ==
          "2*{(0:0),(0:0)} + {(0:1)}\n");
    CHECK(run_cli("hall --quiver cyclic:1 mul --alg dual --a '{(0:0)}' --b '{(0:0)}'").out ==
          "2*{(0:0),(0:0)} + {(0:1)}\n");
    CHECK(run_cli("hall --quiver cyclic:2 center --kind z --i 1").out == "{(0:1)} + {(1:1)}\n");
    CHECK(run_cli("hall --quiver ainf pair --a '{(1:0)}' --expr t[1,1]").out == "1\n");
    CHECK(run_cli("hall --quiver cyclic:2 unwind --a '{(0:0)}' --lo -3 --hi 3").out ==
          "{(-2:0)} + {(0:0)} + {(2:0)}\n");
}

TEST_CASE("detcoeff and ideal") {
    CHECK(run_cli("detcoeff --l 2 --i 1").out == "t[2,0] + t[2,1] - t[1,0]*t[1,1]\n");
    CHECK(run_cli("ideal --l 2 --expr 't[2,0] + t[2,1] - t[1,0]*t[1,1]'").out == "true\n");
    CHECK(run_cli("ideal --l 2 --expr 't[1,0]'").out == "false\n");
    CHECK(run_cli("ideal --l 2 --expr 't[2,0] + t[2,1]'").out == "false\n");
}

TEST_CASE("fock and diagrams") {
    CHECK(run_cli("fock apply --op f --m 0 --state '|[]>'").out == "-|[1]>\n");
    CHECK(run_cli("fock apply --op f --m 1 --l 2 --state '|[1]>'").out == "-|[1,1]> - |[2]>\n");
    RunResult chr = run_cli("fock char --weights 0 --l 2 --deg 5");
    CHECK(chr.out.find("1,1,1,2,2,3") != std::string::npos);
    CHECK(chr.out.find("MATCH") != std::string::npos);
    CHECK(run_cli("diagrams sdiag --shifts 0 --n 4").out == "5\n");
    CHECK(run_cli("diagrams folded --shifts 0 --l 2 --n 3").out == "2\n");
}

TEST_CASE("json output names the same terms") {
    RunResult r = run_cli("qchar --shape 2 --n 0 --N 2 --json");
    CHECK(r.code == 0);
    CHECK(r.out.find("L[1,0]*L[1,1]") != std::string::npos);
    CHECK(r.out.find("\"1\"") != std::string::npos);
    CHECK(r.out.find("\"modulus\":0") != std::string::npos);
}

TEST_CASE("check suite wiring") {
    RunResult r = run_cli("check hall-dual --maxdeg 2 --quiver cyclic:2");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("PASS (counted == dual) on ", 0) == 0);
    CHECK(r.out.find("pairs") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run_cli("qchar --shape 1,1,1 --n 0 --N 2").code == 3);   // too many rows
    CHECK(run_cli("res --expr 't[1,0' --m 0").code == 2);          // parse error
    CHECK(run_cli("pbw --expr 'L[2,0]' --N 2").code == 3);         // not a character
    CHECK(run_cli("hall --quiver bogus mul --a '{}' --b '{}'").code == 2);
}
