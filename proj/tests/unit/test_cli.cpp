#include "cyclone/cli.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cyclone::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path;
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

} // namespace

TEST_CASE("count") {
    CHECK(run({"count", "-n", "7", "-d", "2"}).out == "42\n");
    CHECK(run({"count", "-n", "9", "-d", "4"}).out == "357\n");
    CHECK(run({"count", "-n", "10", "-d", "5"}).out == "1233\n");
    CHECK(run({"count", "-n", "11", "-d", "5"}).out == "51676\n");
    const auto par = run({"count", "-n", "10", "-d", "3", "--parallel", "3", "--budget", "7"});
    CHECK(par.code == 0);
    CHECK(par.out == "8477\n");
    CHECK(par.err.find("triangulations=8477") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({"count", "-n", "3", "-d", "3"}).code == 2);
    CHECK(run({"count", "-n", "3"}).code == 2);
    CHECK(run({"count", "-n", "x", "-d", "2"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"enumerate", "-n", "5", "-d", "2", "--format", "xml"}).code == 2);
    CHECK(run({"count", "-n", "8", "-d", "3", "--budget", "0", "--parallel", "2"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("capacity exits 3") {
    setenv("CYCLONE_NODE_LIMIT", "50", 1);
    CHECK(run({"poset", "-n", "8", "-d", "3"}).code == 3);
    unsetenv("CYCLONE_NODE_LIMIT");
}

TEST_CASE("count with checkpoint pauses and resumes") {
    const auto ckpt = std::filesystem::temp_directory_path() / "cyclone_cli.ckpt";
    std::filesystem::remove(ckpt);
    const auto first =
        run({"count", "-n", "10", "-d", "3", "--checkpoint", ckpt.string(), "--budget", "20", "--pause-after", "3000"});
    CHECK(first.code == 3);
    CHECK(std::filesystem::exists(ckpt));
    const auto second = run({"count", "-n", "10", "-d", "3", "--checkpoint", ckpt.string(), "--budget", "20"});
    CHECK(second.code == 0);
    CHECK(second.out == "8477\n");
    CHECK_FALSE(std::filesystem::exists(ckpt));

    temp_file("cyclone_cli.ckpt", "garbage\n");
    CHECK(run({"count", "-n", "10", "-d", "3", "--checkpoint", ckpt.string()}).code == 2);
    std::filesystem::remove(ckpt);
}

TEST_CASE("ledger") {
    const auto path = std::filesystem::temp_directory_path() / "cyclone_cli_ledger.txt";
    std::filesystem::remove(path);
    run({"count", "-n", "7", "-d", "2", "--ledger", path.string()});
    run({"count", "-n", "7", "-d", "2", "--ledger", path.string()});
    run({"count", "-n", "8", "-d", "3", "--ledger", path.string()});
    std::ifstream in(path);
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '#') rows.push_back(line);
    }
    CHECK(rows.size() == 2);
    CHECK(rows[0].rfind("5 2 42 ", 0) == 0);
    CHECK(rows[1].rfind("5 3 138 ", 0) == 0);
    std::filesystem::remove(path);
}

TEST_CASE("enumerate") {
    CHECK(run({"enumerate", "-n", "4", "-d", "2"}).out == "{{1,2,3},{1,3,4}}\n{{1,2,4},{2,3,4}}\n");
    CHECK(lines(run({"enumerate", "-n", "6", "-d", "2"}).out) == 14);
    const auto c53 = run({"enumerate", "-n", "5", "-d", "3", "--with-gkz"}).out;
    CHECK(c53.find("{{1,2,3,5},{1,3,4,5}} (96,48,96,48,96)") != std::string::npos);
    CHECK(c53.find("{{1,2,3,4},{1,2,4,5},{2,3,4,5}} (84,96,24,96,84)") != std::string::npos);
    const auto c62 = run({"enumerate", "-n", "6", "-d", "2", "--with-gkz"}).out;
    for (const auto& node : fixtures::fig3_nodes()) {
        CHECK(c62.find(cyclone::parse_triangulation(node.cells).to_text() + " " + node.gkz) != std::string::npos);
    }
    const auto jsonl = run({"enumerate", "-n", "4", "-d", "2", "--format", "jsonl", "--with-gkz"}).out;
    CHECK(jsonl == "{\"cells\":[[1,2,3],[1,3,4]],\"gkz\":[8,2,8,6]}\n{\"cells\":[[1,2,4],[2,3,4]],\"gkz\":[6,8,2,8]}\n");
    CHECK(run({"enumerate", "-n", "4", "-d", "2", "--format", "jsonl"}).out.find("gkz") == std::string::npos);
}

TEST_CASE("poset") {
    const auto p = run({"poset", "-n", "6", "-d", "2", "--reduce"});
    CHECK(p.code == 0);
    CHECK(p.out.rfind("nodes=14 edges=21 tree=13 min={{1,2,3},{1,3,4},{1,4,5},{1,5,6}} "
                      "max={{1,2,6},{2,3,6},{3,4,6},{4,5,6}} reduced=21",
                      0) == 0);
    CHECK(run({"poset", "-n", "4", "-d", "2"}).out.rfind("nodes=2 edges=1 tree=1", 0) == 0);
    CHECK(run({"poset", "-n", "8", "-d", "3"}).out.rfind("nodes=138 ", 0) == 0);
    const auto dot = std::filesystem::temp_directory_path() / "cyclone_cli.dot";
    CHECK(run({"poset", "-n", "6", "-d", "2", "--dot", dot.string()}).code == 0);
    std::ifstream in(dot);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text.rfind("digraph hst1 {", 0) == 0);
    std::filesystem::remove(dot);
}

TEST_CASE("ratios") {
    const auto r = run({"ratios", "--max-n", "9"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1.000") != std::string::npos);
    CHECK(r.out.find("1.045") != std::string::npos);
    CHECK(r.out.find("0.832") != std::string::npos);
    CHECK(run({"ratios", "--max-n", "6"}).code == 2);
}

TEST_CASE("check") {
    const auto good = temp_file("cyclone_good.txt", "{{1,2,3},{1,3,4}}\n");
    const auto ok = run({"check", "-n", "4", "-d", "2", "--file", good.string()});
    CHECK(ok.code == 0);
    CHECK(ok.out == "1: ok\n");

    const auto bad = temp_file("cyclone_bad.txt", "{{1,2,3},{1,3,4}}\n{{1,2,3}}\n");
    const auto r = run({"check", "-n", "4", "-d", "2", "--file", bad.string()});
    CHECK(r.code == 1);
    CHECK(r.out.find("2: violation: volume 2 of 8") != std::string::npos);

    const auto malformed = temp_file("cyclone_malformed.txt", "{{1,2,3},{1,3,4}}\n{{1,2}\n");
    const auto m = run({"check", "-n", "4", "-d", "2", "--file", malformed.string()});
    CHECK(m.code == 2);
    CHECK(m.err.find(":2: parse error") != std::string::npos);
    CHECK(m.out.empty());

    CHECK(run({"check", "-n", "4", "-d", "2", "--file", "/nonexistent/x"}).code == 2);
    for (const auto& p : {good, bad, malformed}) std::filesystem::remove(p);
}

TEST_CASE("root and gkz") {
    const auto r = run({"root", "-n", "6", "-d", "2"});
    CHECK(r.out == "{{1,2,3},{1,3,4},{1,4,5},{1,5,6}} (40,2,8,18,32,20)\n");
    CHECK(run({"root", "-n", "5", "-d", "3"}).out == "{{1,2,3,5},{1,3,4,5}} (96,48,96,48,96)\n");
    const auto g = run({"gkz", "-n", "4", "-d", "2", "{{1,2,4},{2,3,4}}"});
    CHECK(g.code == 0);
    CHECK(g.out.find("(6,8,2,8)") != std::string::npos);
    CHECK(run({"gkz", "-n", "4", "-d", "2", "{{1,2,4}"}).code == 2);
}
