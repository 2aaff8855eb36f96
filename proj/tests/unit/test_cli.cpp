#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "gridwalk/textio.hpp"

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = gridwalk::cli::cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path("/tmp/gridwalk-test-" + name) {
        std::ofstream f(path);
        f << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("curve gen emits the published index strings") {
    const CliResult r = run({"curve", "gen", "brgray", "-n", "3", "--format", "indices"});
    CHECK(r.code == 0);
    CHECK(r.out == "1, 2, -1, 3, 1, -2, -1\n");

    const CliResult again = run({"curve", "gen", "brgray", "-n", "3", "--format", "indices"});
    CHECK(again.out == r.out);
}

TEST_CASE("curve list names every entry") {
    const CliResult r = run({"curve", "list"});
    CHECK(r.code == 0);
    CHECK(r.out.find("gosper-flowsnake\n") != std::string::npos);
    CHECK(r.out.find("brgray\n") != std::string::npos);
    CHECK(r.out.find("takagi\n") != std::string::npos);
}

TEST_CASE("curve gen formats") {
    SUBCASE("bfile") {
        const CliResult r = run({"curve", "gen", "brgray", "-n", "6", "--format", "bfile"});
        CHECK(r.code == 0);
        CHECK(r.out.substr(0, 4) == "1 1\n");
        const auto values = gridwalk::parse_bfile(r.out);
        CHECK(values.size() == 63);
        CHECK(values[7] == 4);
    }
    SUBCASE("points") {
        const CliResult r = run({"curve", "gen", "brgray", "-n", "2", "--format", "points"});
        CHECK(r.code == 0);
        CHECK(r.out == "0.000000, 0.000000\n1.000000, 0.000000\n1.000000, 1.000000\n"
                       "0.000000, 1.000000\n");
    }
    SUBCASE("svg") {
        const CliResult r = run({"curve", "gen", "sierpinski-triangle", "-n", "3",
                                 "--format", "svg"});
        CHECK(r.code == 0);
        CHECK(r.out.rfind("<?xml", 0) == 0);
        CHECK(r.out.find("<polyline") != std::string::npos);
    }
    SUBCASE("entries without grids reject geometric formats") {
        const CliResult r = run({"curve", "gen", "takagi", "-n", "3", "--format", "points"});
        CHECK(r.code == 1);
        CHECK(r.err.find("no grid binding") != std::string::npos);
    }
    SUBCASE("-o writes a file") {
        const std::string path = "/tmp/gridwalk-test-out.txt";
        const CliResult r = run({"curve", "gen", "brgray", "-n", "2", "--format", "indices",
                                 "-o", path});
        CHECK(r.code == 0);
        CHECK(r.out.empty());
        CHECK(gridwalk::read_file(path) == "1, 2, -1\n");
        std::remove(path.c_str());
    }
}

TEST_CASE("walk verify prints the report") {
    TempFile file("ex3.txt", "1, 2, 3, -2, -1, 2, -3\n");
    const CliResult r = run({"walk", "verify", "--grid", "orthogonal-3", file.path});
    CHECK(r.code == 0);
    CHECK(r.out.find("is_walk: true\n") != std::string::npos);
    CHECK(r.out.find("is_curve: true\n") != std::string::npos);
    CHECK(r.out.find("is_closed: false\n") != std::string::npos);
    CHECK(r.out.find("dimension: 3\n") != std::string::npos);
}

TEST_CASE("walk verify reports a decode failure") {
    TempFile file("bad.txt", "1, 1, 1\n");
    // generator 1 of the hexagonal grid cannot repeat from the same class
    const CliResult r = run({"walk", "verify", "--grid", "hexagonal", file.path});
    CHECK(r.code == 1);
    CHECK(r.out.find("is_walk: false\n") != std::string::npos);
}

TEST_CASE("walk random is reproducible") {
    const std::vector<std::string> cmd = {"walk", "random", "--grid", "triangular",
                                          "--steps", "64", "--seed", "11", "--no-backtrack"};
    const CliResult a = run(cmd);
    const CliResult b = run(cmd);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto steps = gridwalk::parse_index_sequence(a.out);
    CHECK(steps.size() == 64);
}

TEST_CASE("gray subcommand") {
    SUBCASE("prints the code lines") {
        const CliResult r = run({"gray", "--dim", "2"});
        CHECK(r.code == 0);
        CHECK(r.out == "00\n10\n11\n01\n");
    }
    SUBCASE("enumerates at d=3") {
        const CliResult r = run({"gray", "--dim", "3", "--enumerate"});
        CHECK(r.code == 0);
        CHECK(r.out == "codes: 18\nbrgray: 6\norbit: 48\n");
    }
    SUBCASE("checks a code file") {
        TempFile file("code.txt", "000\n100\n110\n111\n101\n001\n011\n010\n");
        const CliResult r = run({"gray", "--dim", "3", "--check", file.path});
        CHECK(r.code == 0);
        CHECK(r.out == "is_gray_code: true\nis_brgray: false\n");
    }
}

TEST_CASE("lsys run") {
    TempFile config("rabbit.json", R"({
        "alphabet": "finite", "symbols": [0, 1],
        "rules": {"0": [1], "1": [1, 0]},
        "closure": "explicit", "start": [0]
    })");
    const CliResult r = run({"lsys", "run", config.path, "-n", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "1, 0, 1, 1, 0, 1, 0, 1\n");

    const CliResult squared = run({"lsys", "run", config.path, "--squared", "2"});
    const CliResult direct = run({"lsys", "run", config.path, "-n", "4"});
    CHECK(squared.code == 0);
    CHECK(squared.out == direct.out);

    const CliResult missing = run({"lsys", "run", "/tmp/definitely-missing.json", "-n", "1"});
    CHECK(missing.code == 2);
}

TEST_CASE("grid show handles builtins and config files") {
    const CliResult r = run({"grid", "show", "triangular"});
    CHECK(r.code == 0);
    CHECK(r.out.find("dimension: 2\n") != std::string::npos);
    CHECK(r.out.find("generator 3") != std::string::npos);

    const CliResult svg = run({"grid", "show", "hexagonal", "--svg"});
    CHECK(svg.code == 0);
    CHECK(svg.out.rfind("<?xml", 0) == 0);

    TempFile config("grid.json", R"({
        "dimension": 2, "basis": [[1, 0], [0, 1]], "anchors": [["0", "0"]],
        "generators": [{"from": 0, "to": 0, "offset": [1, 0]},
                       {"from": 0, "to": 0, "offset": [0, 1]}]
    })");
    const CliResult from_file = run({"grid", "show", config.path});
    CHECK(from_file.code == 0);
    CHECK(from_file.out.find("generator 2") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run({"definitely-not-a-subcommand"}).code == 2);
    CHECK(run({}).code == 2);
    const CliResult unknown_flag = run({"gray", "--dim", "3", "--frobnicate"});
    CHECK(unknown_flag.code == 2);
    CHECK(!unknown_flag.err.empty());
    CHECK(run({"curve", "gen", "no-such-curve", "-n", "1"}).code == 1);
    CHECK(run({"grid", "show", "no-such-grid"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}
