// End-to-end tests of the command-line tool: exact output bytes for the
// deterministic commands, exit-code contracts, and JSON well-formedness.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;

std::string fixture(const std::string& name) {
    return std::string(SYMRING_FIXTURES) + "/" + name;
}

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Runs the tool with the given argument string, capturing both streams.
RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path dir = fs::temp_directory_path();
    const fs::path out_path = dir / ("symring_cli_out_" + std::to_string(++counter) + ".txt");
    const fs::path err_path = dir / ("symring_cli_err_" + std::to_string(counter) + ".txt");
    const std::string cmd = std::string("\"") + SYMRING_BIN + "\" " + args + " > \"" +
                            out_path.string() + "\" 2> \"" + err_path.string() + "\"";
    const int status = std::system(cmd.c_str());
    RunResult res;
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    res.out = slurp(out_path);
    res.err = slurp(err_path);
    fs::remove(out_path);
    fs::remove(err_path);
    return res;
}

/// Writes input content to a throwaway file and removes it on destruction.
struct TempFile {
    fs::path path;
    explicit TempFile(const std::string& content) {
        static int counter = 0;
        path = fs::temp_directory_path() / ("symring_cli_in_" + std::to_string(++counter) + ".txt");
        std::ofstream(path, std::ios::binary) << content;
    }
    ~TempFile() { fs::remove(path); }
    std::string str() const { return path.string(); }
};

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("chartable prints the degree-4 table exactly") {
    const RunResult res = run_cli("chartable 4");
    CHECK(res.code == 0);
    CHECK(res.err.empty());
    CHECK(res.out ==
          "class\t[1,1,1,1]\t[2,1,1]\t[2,2]\t[3,1]\t[4]\n"
          "[4]\t1\t1\t1\t1\t1\n"
          "[3,1]\t3\t1\t-1\t0\t-1\n"
          "[2,2]\t2\t0\t2\t-1\t0\n"
          "[2,1,1]\t3\t-1\t-1\t0\t1\n"
          "[1,1,1,1]\t1\t-1\t1\t1\t-1\n");
}

TEST_CASE("product and power expansions print known values") {
    CHECK(run_cli("lr 2,2 2,2").out ==
          "[4,4] + [4,3,1] + [4,2,2] + [3,3,1,1] + [3,2,2,1] + [2,2,2,2]\n");
    CHECK(run_cli("lr 2 1,1").out == "[3,1] + [2,1,1]\n");
    CHECK(run_cli("plethysm 2 -n 3").out == "[6] + [4,2] + [2,2,2]\n");
    CHECK(run_cli("plethysm 1,1 -n 2").out == "[2,2] + [1,1,1,1]\n");
    CHECK(run_cli("plethysm 1 -n 4").out == "[4]\n");
}

TEST_CASE("transform round trip through files") {
    const TempFile elem("1 : 2 1 3\n-1/2 : 1 3 2\n");
    const RunResult forward = run_cli("dft " + elem.str());
    REQUIRE(forward.code == 0);
    CHECK(contains(forward.out, "r=3\n"));

    const TempFile blocks(forward.out);
    const RunResult back = run_cli("dft --inverse " + blocks.str());
    CHECK(back.code == 0);
    CHECK(back.out == "-1/2 : 1 3 2\n1 : 2 1 3\n");
}

TEST_CASE("symclass is deterministic and names the curvature component") {
    const std::string args = "symclass " + fixture("riemann.sym");
    const RunResult first = run_cli(args);
    const RunResult second = run_cli(args);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(contains(first.out, "r=4\n"));
    CHECK(contains(first.out, "empty: no\n"));
    CHECK(contains(first.out, "dimension: 2\n"));
    CHECK(contains(first.out, "constituents: [2,2]\n"));
    CHECK(contains(first.out, "# e\n"));
    CHECK(contains(first.out, "# h_1\n"));
}

TEST_CASE("decompose splits the degree-3 unit into four components") {
    const TempFile one3("1 : 1 2 3\n");
    const RunResult res = run_cli("decompose " + one3.str());
    CHECK(res.code == 0);
    CHECK(contains(res.out, "r=3\nside: left\nidempotents: 4\ndimension: 6\n"));
    CHECK(contains(res.out, "1\t[3]\t1\t[3]\t0\t0\n"));
    CHECK(contains(res.out, "4\t[1,1,1]\t1\t[1,1,1]\t0\t0\n"));
    CHECK(contains(res.out, "# h_4\n"));

    const RunResult js = run_cli("decompose " + one3.str() + " --json");
    CHECK(js.code == 0);
    const auto doc = nlohmann::json::parse(js.out);
    CHECK(doc.at("count").get<int>() == 4);
    CHECK(doc.at("dimension").get<int>() == 6);
    CHECK(doc.at("components").size() == 4);
    // the four idempotents sum to the unit, so the total is one term
    CHECK(doc.at("total").size() == 1);
    CHECK(doc.at("total")[0].at("coefficient").get<std::string>() == "1");
}

TEST_CASE("identities for the symmetric pair class") {
    const RunResult res = run_cli("identities --symmetry " + fixture("symmetric2.sym"));
    CHECK(res.code == 0);
    CHECK(res.out == "-1 : 1 2\n1 : 2 1\n");
}

TEST_CASE("wspace reports the one-dimensional curvature contraction space") {
    const RunResult uni = run_cli("wspace --symmetry " + fixture("riemann.sym") + " -l 2");
    CHECK(uni.code == 0);
    CHECK(contains(uni.out, "r=4 l=2\nmode: universal\ndim: 1\n"));

    const RunResult lim = run_cli("wspace --symmetry " + fixture("riemann.sym") +
                                  " -l 2 --mode dim-limited -d 2");
    CHECK(lim.code == 0);
    CHECK(contains(lim.out, "r=4 l=2\nmode: dim-limited\ndim: 1\n"));
}

TEST_CASE("standard identity reduces to zero at dimension 2 and survives at 3") {
    const std::string common = " --idempotent " + fixture("unit8.elem") + " --candidates " +
                               fixture("std_candidates.elem") + " --mode dim-limited";
    const RunResult zero00 =
        run_cli("reduce " + fixture("std_identity_00.expr") + common + " -d 2");
    CHECK(zero00.code == 0);
    CHECK(zero00.out == "r=8 l=3 b0=0,0\n");

    const RunResult zero11 =
        run_cli("reduce " + fixture("std_identity_11.expr") + common + " -d 2");
    CHECK(zero11.code == 0);
    CHECK(zero11.out == "r=8 l=3 b0=1,1\n");

    // for 3x3 matrices the degree-4 alternating sum is not an identity
    const RunResult alive = run_cli("reduce " + fixture("std_identity_00.expr") + common + " -d 3");
    CHECK(alive.code == 0);
    CHECK(contains(alive.out, "r=8 l=3 b0=0,0\n"));
    CHECK(contains(alive.out, " : "));
}

TEST_CASE("pair interchange reduces to zero for the curvature class") {
    const TempFile expr("r=4\n1 : 1 2 3 4\n-1 : 3 4 1 2\n");
    const std::string args = "reduce " + expr.str() + " --symmetry " + fixture("riemann.sym");
    const RunResult res = run_cli(args);
    CHECK(res.code == 0);
    CHECK(res.out == "r=4\n");

    const RunResult js = run_cli(args + " --json");
    CHECK(js.code == 0);
    const auto doc = nlohmann::json::parse(js.out);
    CHECK(doc.at("r").get<int>() == 4);
    CHECK(doc.at("w_rank").get<int>() == 2);
    CHECK(doc.at("terms").empty());
}

TEST_CASE("exit codes distinguish errors and guard refusals") {
    const RunResult missing = run_cli("dft /nonexistent/no_such_file.elem");
    CHECK(missing.code == 1);
    CHECK(contains(missing.err, "cannot open file"));

    const RunResult guarded = run_cli("chartable 9");
    CHECK(guarded.code == 2);
    CHECK(contains(guarded.err, "guard refusal"));

    const RunResult forced = run_cli("--force chartable 9");
    CHECK(forced.code == 0);
    CHECK(forced.out.rfind("class\t", 0) == 0);

    const TempFile bad("# comment\n1 : 1 2\nbogus\n");
    const RunResult malformed = run_cli("dft " + bad.str());
    CHECK(malformed.code == 1);
    CHECK(contains(malformed.err, ":3:"));

    CHECK(run_cli("frobnicate").code == 1);
}

TEST_CASE("json documents parse and carry the exact table") {
    const RunResult table = run_cli("chartable 4 --json");
    CHECK(table.code == 0);
    const auto doc = nlohmann::json::parse(table.out);
    CHECK(doc.at("r").get<int>() == 4);
    CHECK(doc.at("class_sizes") == nlohmann::json({1, 6, 3, 8, 6}));
    CHECK(doc.at("rows")[2].at("partition").get<std::string>() == "[2,2]");
    CHECK(doc.at("rows")[2].at("values") == nlohmann::json({2, 0, 2, -1, 0}));

    const RunResult cls = run_cli("symclass " + fixture("riemann.sym") + " --json");
    CHECK(cls.code == 0);
    const auto cdoc = nlohmann::json::parse(cls.out);
    CHECK(cdoc.at("empty").get<bool>() == false);
    CHECK(cdoc.at("dimension").get<int>() == 2);
    CHECK(cdoc.at("constituents")[0].at("partition").get<std::string>() == "[2,2]");
    CHECK(cdoc.at("constituents")[0].at("multiplicity").get<int>() == 1);
}
