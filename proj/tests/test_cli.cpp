// End-to-end tests for the command-line interface: subcommand wiring, exit
// codes, stream handling, and byte-determinism of seeded runs. Most cases
// drive cli_run in-process; a few shell out to the real binary (path in
// $ZSP_CLI, defaulting to ./zsp next to the test's working directory).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "zsp/cli.hpp"

using namespace zsp;

namespace {

// Keep generated realization tables out of the working directory when the
// test runs outside ctest (which pins ZSP_CACHE_DIR itself).
const bool cache_dir_pinned = [] {
    setenv("ZSP_CACHE_DIR", "/tmp/zsp_test_cli_cache", 0);
    return true;
}();

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = cli_run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string cli_path() {
    const char* p = std::getenv("ZSP_CLI");
    if (p && *p) return p;
    // Fall back to the zsp binary next to this test executable.
    std::error_code ec;
    auto self = std::filesystem::canonical("/proc/self/exe", ec);
    return ec ? "./zsp" : (self.parent_path() / "zsp").string();
}

// Runs the real binary through the shell, capturing stdout/stderr/exit code.
CliResult shell(const std::string& argline, const std::string& input = "") {
    static int counter = 0;
    const std::string tag =
        "/tmp/zsp_cli_t" + std::to_string(getpid()) + "_" + std::to_string(counter++);
    const std::string in_file = tag + ".in", out_file = tag + ".out", err_file = tag + ".err";
    {
        std::ofstream f(in_file);
        f << input;
    }
    const std::string cmd =
        cli_path() + " " + argline + " <" + in_file + " >" + out_file + " 2>" + err_file;
    const int status = std::system(cmd.c_str());
    auto slurp = [](const std::string& path) {
        std::ifstream f(path);
        std::ostringstream ss;
        ss << f.rdbuf();
        return ss.str();
    };
    CliResult r{WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out_file), slurp(err_file)};
    std::remove(in_file.c_str());
    std::remove(out_file.c_str());
    std::remove(err_file.c_str());
    return r;
}

}  // namespace

// ---- partition --------------------------------------------------------------

TEST_CASE("partition emits a text block that verify accepts") {
    CliResult p = run({"partition", "--group", "Z4xZ2^2", "--sizes", "3,3,4,5"});
    REQUIRE(p.code == 0);
    CHECK(p.out.find("A partition for sets of sizes:  2*3  1*4  1*5") != std::string::npos);

    CliResult v = run({"verify", "--group", "Z4xZ2^2"}, p.out);
    CHECK(v.code == 0);
    CHECK(v.out == "block 1: ok\n");

    // Forcing mismatched sizes must fail the same text.
    CliResult bad = run({"verify", "--group", "Z4xZ2^2", "--sizes", "3,3,3,3,3"}, p.out);
    CHECK(bad.code == 1);
    CHECK(bad.out.find("FAIL") != std::string::npos);
}

TEST_CASE("partition --format json round-trips through verify") {
    CliResult p = run({"partition", "--group", "Z8xZ2", "--triple", "5,0,0", "--format", "json"});
    REQUIRE(p.code == 0);
    nlohmann::json doc = nlohmann::json::parse(p.out);
    CHECK(doc["group"] == "Z8xZ2");
    CHECK(doc["ground"] == "star:Z8xZ2");
    CHECK(doc["sets"].size() == 5);

    CliResult v = run({"verify", "--group", "Z8xZ2"}, p.out);
    CHECK(v.code == 0);
    CHECK(v.out == "ok\n");

    CliResult wrong_group = run({"verify", "--group", "Z4xZ2^2"}, p.out);
    CHECK(wrong_group.code == 2);
    CHECK(wrong_group.err.find("bad-input") != std::string::npos);
}

TEST_CASE("partition maps library failures onto documented exit codes") {
    CliResult unique = run({"partition", "--group", "Z8", "--sizes", "7"});
    CHECK(unique.code == 1);
    CHECK(unique.err.find("no-zero-sum-partition") != std::string::npos);

    CliResult odd = run({"partition", "--group", "Z6xZ2", "--sizes", "11"});
    CHECK(odd.code == 2);
    CHECK(odd.err.find("not-a-two-group") != std::string::npos);

    CliResult small = run({"partition", "--group", "Z4xZ2", "--sizes", "2,5"});
    CHECK(small.code == 2);
    CHECK(small.err.find("size-precondition") != std::string::npos);

    CliResult unsupported = run({"partition", "--group", "Z64xZ64", "--triple", "1365,0,0"});
    CHECK(unsupported.code == 2);
    CHECK(unsupported.err.find("unsupported-group") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run({"partition", "--group", "Z4xZ2"}).code == 2);  // no sizes
    CHECK(run({"partition", "--sizes", "3,4"}).code == 2);    // no group
    CHECK(run({"partition", "--group", "Z4xZ2", "--sizes", "3,4", "--triple", "1,1,0"}).code ==
          2);                                                 // mutually exclusive
    CHECK(run({"nonsense"}).code == 2);                       // unknown subcommand
    CHECK(run({}).code == 2);                                 // missing subcommand
    CHECK(run({"partition", "--group", "Z4xZ2", "--sizes", "3,x"}).code == 2);
    CHECK(run({"tables", "gen"}).code == 2);  // neither --group nor --ground
    CHECK(run({"tables", "gen", "--group", "Z2^4", "--ground", "star:Z2^4"}).code == 2);
}

// ---- verify ------------------------------------------------------------------

TEST_CASE("verify accepts a handwritten block with a non-zero target") {
    // In Z8 both sets sum to (2): a constant-sum family that is not zero-sum.
    const std::string text =
        "(1), (2), (7)\n"
        "(3), (4), (5), (6)\n"
        "A partition for sets of sizes:  1*3  1*4  0*5\n";
    CliResult v = run({"verify", "--group", "Z8", "--target", "(2)"}, text);
    CHECK(v.code == 0);
    CHECK(v.out == "block 1: ok\n");

    CliResult zero = run({"verify", "--group", "Z8", "--target", "0"}, text);
    CHECK(zero.code == 1);
}

TEST_CASE("verify explains the unique-involution obstruction on stderr") {
    const std::string text =
        "(1), (2), (5)\n"
        "(3), (4), (6), (7)\n"
        "A partition for sets of sizes:  1*3  1*4  0*5\n";
    CliResult v = run({"verify", "--group", "Z8"}, text);
    CHECK(v.code == 1);
    CHECK(v.out.find("FAIL") != std::string::npos);
    CHECK(v.err.find("unique involution") != std::string::npos);

    CliResult empty = run({"verify", "--group", "Z8"}, "  \n ");
    CHECK(empty.code == 2);
}

TEST_CASE("verify reads from a file via --in") {
    CliResult p = run({"partition", "--group", "Z2^4", "--sizes", "3,4,4,4"});
    REQUIRE(p.code == 0);
    const std::string path = "/tmp/zsp_cli_verify_in_" + std::to_string(getpid()) + ".txt";
    {
        std::ofstream f(path);
        f << p.out;
    }
    CliResult v = run({"verify", "--group", "Z2^4", "--in", path});
    CHECK(v.code == 0);
    std::remove(path.c_str());

    CliResult missing = run({"verify", "--group", "Z2^4", "--in", "/nonexistent/file"});
    CHECK(missing.code == 2);
}

// ---- search ------------------------------------------------------------------

TEST_CASE("search reports found / exhausted / budget-exceeded") {
    CliResult found = run({"search", "--group", "Z2^3", "--sizes", "3,4"});
    CHECK(found.code == 0);
    CHECK(found.err.find("search: found") != std::string::npos);
    CliResult v = run({"verify", "--group", "Z2^3"}, found.out);
    CHECK(v.code == 0);

    CliResult exhausted = run({"search", "--group", "Z4", "--sizes", "3"});
    CHECK(exhausted.code == 1);
    CHECK(exhausted.err.find("exhausted") != std::string::npos);

    CliResult budget =
        run({"search", "--group", "Z2^4", "--sizes", "3,3,3,3,3", "--budget-nodes", "2"});
    CHECK(budget.code == 3);
    CHECK(budget.err.find("budget exceeded") != std::string::npos);
}

TEST_CASE("search honors a non-zero target") {
    CliResult t = run({"search", "--group", "Z8", "--sizes", "3,4", "--target", "(2)"});
    CHECK(t.code == 0);
    CliResult v = run({"verify", "--group", "Z8", "--target", "(2)"}, t.out);
    CHECK(v.code == 0);
}

TEST_CASE("seeded single-worker searches are byte-deterministic") {
    std::vector<std::string> args{"search", "--group", "Z4xZ2^2", "--sizes",
                                  "3,3,4,5", "--seed", "42"};
    CliResult a = run(args);
    CliResult b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);

    CliResult c = run({"search", "--group", "Z4xZ2^2", "--sizes", "3,3,4,5", "--seed", "7"});
    REQUIRE(c.code == 0);
    CliResult v = run({"verify", "--group", "Z4xZ2^2"}, c.out);
    CHECK(v.code == 0);
}

// ---- explore ------------------------------------------------------------------

TEST_CASE("explore constant-sum finds a common non-zero sum") {
    CliResult e = run({"explore", "constant-sum", "--group", "Z16", "--sizes", "1,2,2,3,7"});
    CHECK(e.code == 0);
    CHECK(e.out.find("common sum: (") != std::string::npos);
    CHECK(e.err.find("explore: found") != std::string::npos);

    CliResult two_ones = run({"explore", "constant-sum", "--group", "Z16", "--sizes",
                              "1,1,2,4,7"});
    CHECK(two_ones.code == 2);
    CHECK(two_ones.err.find("size-precondition") != std::string::npos);
}

// ---- tables -------------------------------------------------------------------

TEST_CASE("tables check re-verifies every stored entry") {
    CliResult c = run({"tables", "check"});
    CHECK(c.code == 0);
    CHECK(c.out.find("entries checked, 0 failures") != std::string::npos);
    CHECK(c.out.find("[embedded]") != std::string::npos);
}

TEST_CASE("tables gen tabulates a star and a named ground") {
    CliResult g = run({"tables", "gen", "--group", "Z2^4"});
    CHECK(g.code == 0);
    CHECK(g.out.find("table star:Z2^4 complete: 4 triples") != std::string::npos);

    CliResult shifted = run({"tables", "gen", "--ground", "star:Z4xZ2"});
    CHECK(shifted.code == 0);
    CHECK(shifted.out.find("table star:Z4xZ2 complete: 1 triples") != std::string::npos);

    CliResult bad = run({"tables", "gen", "--ground", "nonsense:Z2"});
    CHECK(bad.code == 2);
}

// ---- labelings ----------------------------------------------------------------

TEST_CASE("label dmagic prints classes and the magic constant") {
    CliResult lab = run({"label", "dmagic", "--group", "Z4xZ2", "--classes", "3,5"});
    CHECK(lab.code == 0);
    CHECK(lab.out.find("class 1 (3 vertices):") != std::string::npos);
    CHECK(lab.out.find("magic constant: (0, 0)") != std::string::npos);

    CliResult from_stdin = run({"label", "dmagic", "--group", "Z4xZ2"}, "classes 3 5\n");
    CHECK(from_stdin.code == 0);

    CliResult cyclic = run({"label", "dmagic", "--group", "Z8", "--classes", "3,5"});
    CHECK(cyclic.code == 1);
    CHECK(cyclic.err.find("unique-involution") != std::string::npos);
}

TEST_CASE("label tree reads a tree file from stdin") {
    const std::string star = "tree 8\n1 0\n2 0\n3 0\n4 0\n5 0\n6 0\n7 0\n";
    CliResult lab = run({"label", "tree", "--group", "Z4xZ2"}, star);
    CHECK(lab.code == 0);
    CHECK(lab.out.find("edge 1 -> 0:") != std::string::npos);
    CHECK(lab.out.find("root 0") != std::string::npos);

    CliResult mismatch = run({"label", "tree", "--group", "Z4xZ2^2"}, star);
    CHECK(mismatch.code == 2);
    CHECK(mismatch.err.find("size-precondition") != std::string::npos);
}

TEST_CASE("label digraph reads arcs from stdin and prints weights") {
    const std::string triangles = "digraph 6\n0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n";
    CliResult lab = run({"label", "digraph", "--group", "Z4xZ2^2"}, triangles);
    CHECK(lab.code == 0);
    CHECK(lab.out.find("arc 0 -> 1:") != std::string::npos);
    CHECK(lab.out.find("vertex 5 weight:") != std::string::npos);

    CliResult excluded = run({"label", "digraph", "--group", "Z4xZ2"}, triangles);
    CHECK(excluded.code == 2);
    CHECK(excluded.err.find("plus 2 or 3") != std::string::npos);
}

TEST_CASE("label output lands in a file via --out") {
    const std::string path = "/tmp/zsp_cli_dmagic_out_" + std::to_string(getpid()) + ".txt";
    CliResult lab =
        run({"label", "dmagic", "--group", "Z4xZ2", "--classes", "3,5", "--out", path});
    CHECK(lab.code == 0);
    CHECK(lab.out.empty());
    std::ifstream f(path);
    std::ostringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str().find("magic constant") != std::string::npos);
    std::remove(path.c_str());
}

// ---- the real binary -----------------------------------------------------------

TEST_CASE("the shipped binary wires stdin, stdout, and exit codes") {
    REQUIRE_MESSAGE(std::filesystem::exists(cli_path()),
                    "CLI binary not found; set ZSP_CLI or run from the build directory");

    CliResult p = shell("partition --group Z4xZ2^2 --sizes 3,3,4,5");
    REQUIRE(p.code == 0);
    CliResult v = shell("verify --group Z4xZ2^2", p.out);
    CHECK(v.code == 0);
    CHECK(v.out == "block 1: ok\n");

    CHECK(shell("search --group Z4 --sizes 3").code == 1);
    CHECK(shell("partition --group Z4xZ2").code == 2);
    CHECK(shell("--help").code == 0);
}

TEST_CASE("the shipped binary repeats seeded searches byte-for-byte") {
    REQUIRE(std::filesystem::exists(cli_path()));
    CliResult a = shell("search --group Z4xZ2^2 --sizes 3,3,4,5 --seed 9");
    CliResult b = shell("search --group Z4xZ2^2 --sizes 3,3,4,5 --seed 9");
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("--cache-dir is an app-level option preceding the subcommand") {
    REQUIRE(std::filesystem::exists(cli_path()));
    const std::string dir = "/tmp/zsp_cli_cachedir_" + std::to_string(getpid());
    std::filesystem::remove_all(dir);

    CliResult g = shell("--cache-dir " + dir + " tables gen --group Z2^4");
    CHECK(g.code == 0);
    bool wrote = false;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        wrote |= entry.path().filename().string().rfind("star_Z2_4_", 0) == 0;
    CHECK(wrote);

    // After a subcommand the flag is unknown and must be rejected.
    CliResult misplaced = shell("tables gen --group Z2^4 --cache-dir " + dir);
    CHECK(misplaced.code == 2);
    std::filesystem::remove_all(dir);
}
