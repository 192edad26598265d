#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "nic/cli.hpp"
#include "nic/generate.hpp"
#include "support.hpp"

using namespace nic;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = {}) {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name, const std::string& content) {
    fs::path dir = fs::temp_directory_path() / "nicplanar_cli_tests";
    fs::create_directories(dir);
    fs::path p = dir / name;
    std::ofstream(p) << content;
    return p;
}

std::string g6(const Graph& g) { return serialize_graph(g, GraphFormat::Graph6) + "\n"; }

// Runs the real binary; stdout and stderr captured separately.
Run run_binary(const std::string& args) {
    fs::path err_path = fs::temp_directory_path() / "nicplanar_cli_tests" / "stderr.txt";
    fs::create_directories(err_path.parent_path());
    std::string cmd = std::string(NICPLANAR_BIN) + " " + args + " 2>" + err_path.string();
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    std::ifstream ef(err_path);
    std::string err((std::istreambuf_iterator<char>(ef)), std::istreambuf_iterator<char>());
    return {WEXITSTATUS(status), out, err};
}

}  // namespace

TEST_CASE("recognize accepts an optimal graph") {
    auto path = temp_file("opt5.g6", g6(gen_optimal(5).graph));
    auto r = run({"recognize", path.string()});
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["crossings"].size() == 15);
    CHECK(j["n"] == 27);
    CHECK(r.err.empty());
}

TEST_CASE("recognize rejects K5 with a reason on stderr") {
    auto r = run({"recognize", "--format", "graph6"}, "D~{\n");
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    CHECK(r.err.find("EdgeCountMismatch") != std::string::npos);
}

TEST_CASE("recognize handles several files in parallel") {
    std::vector<std::string> args{"recognize", "--jobs", "3"};
    for (int k = 2; k <= 5; ++k) args.push_back(temp_file("opt" + std::to_string(k) + ".el", serialize_graph(gen_optimal(k).graph, GraphFormat::EdgeList)).string());
    args.push_back(temp_file("k5.g6", "D~{\n").string());
    auto r = run(args);
    CHECK(r.code == 1);
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        auto j = json::parse(line);
        CHECK(j["file"] == args[3 + count]);
        ++count;
    }
    CHECK(count == 4);
    CHECK(r.err.find("k5.g6: EdgeCountMismatch") != std::string::npos);
}

TEST_CASE("parse errors exit with code 2") {
    auto r = run({"recognize", "--format", "graph6"}, "D~\n");
    CHECK(r.code == 2);
    CHECK(r.err.find("ParseError") != std::string::npos);
    CHECK(run({"recognize", "/nonexistent/file"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"recognize", "--bogus"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("verify and dual on generated embeddings") {
    auto gen = run({"generate", "sparsest", "--k", "2"});
    REQUIRE(gen.code == 0);
    auto j = json::parse(gen.out);
    CHECK(j["n"] == 12);
    CHECK(j["m"] == 32);
    std::string emb = j["embedding"].dump();

    auto v = run({"verify", "--maximal"}, emb);
    CHECK(v.code == 0);
    CHECK(json::parse(v.out)["pass"] == true);

    auto d = run({"dual"}, emb);
    CHECK(d.code == 0);
    auto dj = json::parse(d.out);
    for (const auto& s : dj["spheres"]) CHECK(s["planar_edges"] == "14");
    CHECK(dj["rules"]["pass"] == true);

    auto dot = run({"dual", "--format", "dot"}, emb);
    CHECK(dot.out.rfind("graph dual", 0) == 0);

    auto broken = j["embedding"];
    broken["crossings"].push_back(broken["crossings"][0]);
    auto bv = run({"verify"}, broken.dump());
    CHECK(bv.code == 1);
    CHECK(json::parse(bv.out)["pass"] == false);
}

TEST_CASE("density report") {
    auto r = run({"density", "--format", "graph6"}, g6(gen_sparsest(3).graph));
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["n"] == 17);
    CHECK(j["m"] == 48);
    CHECK(j["status"] == "at-lower-bound");
    CHECK(j["within_bounds"] == true);
    auto o = json::parse(run({"density"}, g6(gen_optimal(3).graph)).out);
    CHECK(o["status"] == "at-upper-bound");
}

TEST_CASE("generate formats and families") {
    CHECK(run({"generate", "optimal", "--k", "2", "--format", "graph6"}).out == g6(gen_optimal(2).graph));
    CHECK(run({"generate", "optimal", "--k", "1"}).code == 2);
    for (std::string fam : {"rac", "flip-fixture", "k5-gadget", "nested-k5"}) {
        auto r = run({"generate", fam, "--dot"});
        REQUIRE(r.code == 0);
        auto j = json::parse(r.out);
        CHECK(j.contains("embedding"));
        CHECK(j.contains("dot"));
        CHECK(run({"verify"}, j["embedding"].dump()).code == 0);
    }
    auto a = run({"generate", "nested-k5", "--k", "3", "--mask", "1"}).out;
    auto b = run({"generate", "nested-k5", "--k", "3", "--mask", "2"}).out;
    CHECK(a != b);
    CHECK(run({"generate", "intermediate", "--k", "4", "--i", "2", "--format", "edge-list"}).code == 0);
}

TEST_CASE("oracle command") {
    auto r = run({"oracle", "--optimal"}, g6(gen_optimal(2).graph));
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["kite_sets"].size() == 1);
    CHECK(run({"oracle"}, g6(gen_optimal(3).graph)).code == 2);
    CHECK(run({"oracle", "--limit", "20", "--optimal"}, g6(gen_optimal(3).graph)).code == 0);
}

TEST_CASE("export renders DOT and SVG") {
    std::string emb = embedding_to_json(*gen_optimal(2).witness).dump();
    auto dot = run({"export", "--format", "dot"}, emb);
    CHECK(dot.code == 0);
    CHECK(dot.out.find("shape=square") != std::string::npos);
    auto svg = run({"export", "--format", "svg"}, emb);
    CHECK(svg.code == 0);
    CHECK(svg.out.find("<svg") != std::string::npos);
    CHECK(svg.out.find("<rect") != std::string::npos);
}

TEST_CASE("output is stable across runs") {
    std::string emb = embedding_to_json(*gen_sparsest(3).witness).dump();
    CHECK(run({"dual"}, emb).out == run({"dual"}, emb).out);
    CHECK(run({"generate", "optimal", "--k", "4"}).out == run({"generate", "optimal", "--k", "4"}).out);
}

TEST_CASE("binary keeps stdout machine-readable") {
    auto path = temp_file("k5bin.g6", "D~{\n");
    auto rej = run_binary("recognize " + path.string());
    CHECK(rej.code == 1);
    CHECK(rej.out.empty());
    CHECK(rej.err.find("EdgeCountMismatch") != std::string::npos);

    auto opt = temp_file("opt3bin.g6", g6(gen_optimal(3).graph));
    auto acc = run_binary("recognize " + opt.string());
    CHECK(acc.code == 0);
    CHECK(acc.err.empty());
    CHECK(json::parse(acc.out)["crossings"].size() == 9);

    auto out_path = fs::temp_directory_path() / "nicplanar_cli_tests" / "out.json";
    fs::remove(out_path);
    auto to_file = run_binary("recognize " + opt.string() + " --out " + out_path.string());
    CHECK(to_file.code == 0);
    CHECK(to_file.out.empty());
    std::ifstream f(out_path);
    CHECK(json::parse(f)["n"] == 17);

    CHECK(run_binary("recognize /nonexistent/file").code == 2);
}
