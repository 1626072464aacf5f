#include "doctest.h"
#include "exitgraph/cli.h"
#include "exitgraph/io.h"
#include "unit/support.h"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace exitgraph;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() {
        std::random_device rd;
        path_ = fs::temp_directory_path() / ("exitgraph-cli-" + std::to_string(rd()));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }

    std::string write(const std::string& name, const std::string& text) const {
        const auto p = path_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string path(const std::string& name) const { return (path_ / name).string(); }

private:
    fs::path path_;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("compute") {
    TempDir dir;
    const auto square = dir.write("square.txt", "0 0\n1 0\n1 1\n0 1\n");
    auto r = run({"compute", square});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "2 exit edges: {0,2} witnesses {1,3}; {1,3} witnesses {0,2}\n");

    r = run({"compute", square, "--json"});
    CHECK(r.code == kExitOk);
    const auto doc = nlohmann::ordered_json::parse(r.out);
    CHECK(doc["schema"] == 1);
    CHECK(doc["exit_edge_count"] == 2);
}

TEST_CASE("input errors exit with 1") {
    TempDir dir;
    CHECK(run({"compute", dir.path("missing.txt")}).code == kExitInputError);
    auto r = run({"compute", dir.write("bad.txt", "0 0\n1 zz\n")});
    CHECK(r.code == kExitInputError);
    CHECK(r.err.find("line 2") != std::string::npos);
    r = run({"compute", dir.write("col.txt", "0 0\n1 1\n2 2\n9 0\n")});
    CHECK(r.code == kExitInputError);
    CHECK(r.err.find("CollinearTriple(0,1,2)") != std::string::npos);
    CHECK(run({}).code == kExitInputError);
    CHECK(run({"frobnicate"}).code == kExitInputError);
    CHECK(run({"render", dir.write("t.txt", "0 0\n4 0\n2 4\n")}).code == kExitInputError);  // --out missing
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("check agrees on random sets") {
    TempDir dir;
    std::mt19937_64 rng(10);
    for (int i = 0; i < 5; ++i) {
        const auto s = testsupport::random_set(10, 400, rng);
        const auto r = run({"check", dir.write("r.txt", serialize_points(s))});
        CHECK(r.code == kExitOk);
        CHECK(r.out.find("agree") != std::string::npos);
    }
}

TEST_CASE("stats") {
    TempDir dir;
    auto r = run({"stats", dir.write("tri.txt", "0 0\n4 0\n2 4\n")});
    CHECK(r.code == kExitInputError);
    CHECK(r.err.find("4") != std::string::npos);

    r = run({"stats", dir.write("sq.txt", "0 0\n1 0\n1 1\n0 1\n")});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("exit edges: 2") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);

    r = run({"stats", dir.path("sq.txt"), "--json"});
    CHECK(r.code == kExitOk);
    CHECK(nlohmann::ordered_json::parse(r.out)["stats"]["H"] == 2);
}

TEST_CASE("render writes a file") {
    TempDir dir;
    const auto sq = dir.write("sq.txt", "0 0\n1 0\n1 1\n0 1\n");
    auto r = run({"render", sq, "--out", dir.path("p.svg")});
    CHECK(r.code == kExitOk);
    CHECK(slurp(dir.path("p.svg")) == render_svg(parse_points(slurp(sq)), RenderMode::Primal));
    r = run({"render", sq, "--out", dir.path("d.svg"), "--dual"});
    CHECK(r.code == kExitOk);
    CHECK(slurp(dir.path("d.svg")) == render_svg(parse_points(slurp(sq)), RenderMode::Dual));
}

TEST_CASE("morph") {
    TempDir dir;
    const auto a = dir.write("a.txt", "0 0\n4 0\n2 4\n2 1\n");
    auto r = run({"morph", a, dir.write("b.txt", "0 0\n4 0\n2 4\n2 -1\n")});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("t = 1/2") != std::string::npos);
    CHECK(r.out.find("3 strictly between 0 and 1") != std::string::npos);
    CHECK(r.out.find("exit edge {0,1} with witness 3: yes") != std::string::npos);

    r = run({"morph", a, a});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("no collinearity") != std::string::npos);

    // The target may be degenerate; only the start needs general position.
    r = run({"morph", a, dir.write("c.txt", "0 0\n1 0\n2 0\n3 0\n")});
    CHECK(r.code == kExitOk);

    r = run({"morph", a, dir.write("d.txt", "0 0\n1 0\n")});
    CHECK(r.code == kExitInputError);
}

TEST_CASE("compare") {
    TempDir dir;
    const auto sq = dir.write("sq.txt", "0 0\n1 0\n1 1\n0 1\n");
    const auto tpi = dir.write("tpi.txt", "0 0\n4 0\n2 4\n2 1\n");
    auto r = run({"compare", sq, sq});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("exit structure: same") != std::string::npos);
    CHECK(r.out.find("order type: same") != std::string::npos);

    r = run({"compare", sq, tpi});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("exit structure: different") != std::string::npos);
    CHECK(r.out.find("order type: different") != std::string::npos);

    const auto swapped = dir.write("sw.txt", "0 0\n0 1\n1 1\n1 0\n");
    CHECK(run({"compare", sq, swapped}).out.find("order type: different") != std::string::npos);
    CHECK(run({"compare", sq, swapped, "--unlabeled"}).out.find("order type: same") != std::string::npos);
    CHECK(run({"compare", sq, dir.write("three.txt", "0 0\n4 0\n2 4\n")}).code == kExitInputError);
}

TEST_CASE("search is deterministic") {
    auto a = run({"search", "--n", "9", "--trials", "20", "--seed", "5"});
    auto b = run({"search", "--n", "9", "--trials", "20", "--seed", "5", "--threads", "1"});
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    CHECK(a.out.find("minimum exit edges: ") != std::string::npos);
    CHECK(run({"search", "--n", "3", "--trials", "5", "--seed", "1"}).code == kExitInputError);
    CHECK(run({"search", "--trials", "5"}).code == kExitInputError);
}
