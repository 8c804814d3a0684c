#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <clab/cli.hpp>
#include <clab/json_io.hpp>

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

using namespace clab;
using nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace
{
    struct Run
    {
        int code;
        std::string out, err;
    };

    auto clab_run(std::vector<std::string> args) -> Run
    {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return {code, out.str(), err.str()};
    }

    auto without_timing(const std::string & text) -> std::string
    {
        auto j = ordered_json::parse(text);
        j.erase("timing");
        return j.dump();
    }

    struct TempFile
    {
        fs::path path;

        explicit TempFile(const std::string & name, const std::string & body = "")
            : path(fs::temp_directory_path() / ("clab_test_" + std::to_string(::getpid()) + "_" + name))
        {
            if (! body.empty())
                std::ofstream(path) << body;
        }
        ~TempFile() { fs::remove(path); }

        [[nodiscard]] auto str() const -> std::string { return path.string(); }
    };

    const std::string k3_json = R"({"name": "K3", "vertices": ["a", "b", "c"], "edges": [["a","b"],["b","c"],["a","c"]],
        "lists": {"a": [0,1], "b": [0,1], "c": [0,1]}, "b": 1})";
    const std::string c5_json = R"({"name": "C5", "vertices": ["0","1","2","3","4"],
        "edges": [["0","1"],["1","2"],["2","3"],["3","4"],["4","0"]]})";
}

TEST_CASE("graph file parsing")
{
    auto f = parse_graph_file(k3_json);
    CHECK(f.graph.vertex_count() == 3);
    CHECK(f.fold == 1u);
    CHECK(f.lists->at("a") == ColourSet{0, 1});

    auto round = parse_graph_file(to_json(f).dump());
    CHECK(round.graph == f.graph);
    CHECK(round.lists == f.lists);
    CHECK(round.fold == f.fold);

    CHECK_THROWS_AS(parse_graph_file(R"({"vertices": [], "edges": [], "colour": 1})"), InputError);
    CHECK_THROWS_AS(parse_graph_file(R"({"vertices": ["a"], "edges": [["a","a"]]})"), InputError);
    CHECK_THROWS_AS(parse_graph_file(R"({"vertices": ["a"], "edges": [], "lists": {"a": [-1]}})"), InputError);
    CHECK_THROWS_AS(parse_graph_file(R"({"vertices": ["a"], "edges": [], "lists": {"a": [1, 1]}})"), InputError);
    CHECK_THROWS_AS(parse_graph_file(R"({"vertices": ["a"], "edges": [], "lists": {"q": [1]}})"), InputError);
    CHECK_THROWS_AS(parse_graph_file("{not json"), InputError);

    auto rot = parse_graph_file(R"({"vertices": ["a","b"], "edges": [["a","b"]], "rotation": {"a": ["b"], "b": ["a"]}})");
    CHECK(rot.graph.has_rotation());
    CHECK(check_embedding(rot.graph).faces == 1);
}

TEST_CASE("gadget subcommand")
{
    auto dot = clab_run({"gadget", "--m", "3", "--format", "dot"});
    CHECK(dot.code == 0);
    std::regex node(R"(^  "[^"]+" \[label=)");
    std::size_t nodes = 0;
    std::istringstream lines(dot.out);
    for (std::string line; std::getline(lines, line);)
        nodes += std::regex_search(line, node);
    CHECK(nodes == 18);

    auto json = clab_run({"gadget", "--m", "2"});
    CHECK(json.code == 0);
    auto parsed = parse_graph_file(json.out);
    CHECK(parsed.graph.edge_count() == 47);
    CHECK(parsed.fold == 2u);
    CHECK(parsed.graph.has_rotation());
}

TEST_CASE("exit codes")
{
    TempFile k3("k3.json", k3_json), c5("c5.json", c5_json);

    auto solve = clab_run({"solve", "--input", k3.str()});
    CHECK(solve.code == 0);
    auto j = ordered_json::parse(solve.out);
    CHECK(j["command"] == "solve");
    CHECK(j["verdict"] == "infeasible");
    for (auto key : {"command", "inputs", "verdict", "details", "timing"})
        CHECK(j.contains(key));

    CHECK(clab_run({"verify", "arithmetic", "--max-m", "1000"}).code == 0);
    auto lemma = clab_run({"verify", "lemma", "--m", "1", "--method", "both"});
    CHECK(lemma.code == 0);
    CHECK(ordered_json::parse(lemma.out)["verdict"] == "verified");

    // a budget of one node cannot settle G(3)
    CHECK(clab_run({"verify", "lemma", "--m", "3", "--method", "dfs", "--max-nodes", "1"}).code == 2);

    CHECK(clab_run({"solve", "--input", "/nonexistent/graph.json"}).code == 3);
    CHECK(clab_run({"solve", "--input", k3.str(), "--bogus"}).code == 3);
    CHECK(clab_run({"frobnicate"}).code == 3);
    CHECK(clab_run({"solve", "--input", c5.str(), "--b", "1"}).code == 3); // no lists
    auto capped = clab_run({"verify", "theorem", "--m", "1", "--whole-graph", "--vertex-cap", "10"});
    CHECK(capped.code == 3);
    CHECK(ordered_json::parse(capped.out).contains("error"));

    auto chif = clab_run({"chif", "--input", c5.str(), "--max-b", "2"});
    CHECK(chif.code == 0);
    CHECK(ordered_json::parse(chif.out)["verdict"] == "5/2");

    auto wit = clab_run({"witness", "--input", k3.str(), "--a", "2", "--b", "1", "--universe", "6"});
    CHECK(wit.code == 0);
    CHECK(ordered_json::parse(wit.out)["verdict"] == "witness");
}

TEST_CASE("encode and export-dot write files")
{
    TempFile k3("k3e.json", k3_json), cnf("k3.cnf"), dot("k3.dot");
    CHECK(clab_run({"encode", "--input", k3.str(), "--out", cnf.str()}).code == 0);
    std::ifstream in(cnf.path);
    std::string text((std::istreambuf_iterator<char>(in)), {});
    CHECK(text.find("p cnf") != std::string::npos);

    CHECK(clab_run({"export-dot", "--input", k3.str(), "--out", dot.str()}).code == 0);
    CHECK(fs::file_size(dot.path) > 0);
    CHECK(clab_run({"encode", "--input", k3.str()}).code == 3);
}

TEST_CASE("identical invocations give identical output")
{
    TempFile k3("k3d.json", k3_json);
    for (std::vector<std::string> args : std::vector<std::vector<std::string>>{{"verify", "lemma", "--m", "2"},
             {"verify", "theorem", "--m", "1"}, {"solve", "--input", k3.str()}, {"verify", "arithmetic", "--max-m", "50"}}) {
        auto a = clab_run(args), b = clab_run(args);
        CHECK(a.code == b.code);
        CHECK(without_timing(a.out) == without_timing(b.out));
    }
    CHECK(clab_run({"gadget", "--m", "4"}).out == clab_run({"gadget", "--m", "4"}).out);
}

TEST_CASE("every subcommand documents itself")
{
    std::vector<std::vector<std::string>> helps{{"--help"}, {"gadget", "--help"}, {"solve", "--help"},
        {"encode", "--help"}, {"export-dot", "--help"}, {"witness", "--help"}, {"chif", "--help"},
        {"verify", "--help"}, {"verify", "lemma", "--help"}, {"verify", "theorem", "--help"},
        {"verify", "arithmetic", "--help"}};
    for (const auto & args : helps) {
        auto r = clab_run(args);
        CHECK(r.code == 0);
        CHECK_FALSE(r.out.empty());
    }
    CHECK(clab_run({"solve", "--help"}).out.find("100000000") != std::string::npos);
    CHECK(clab_run({"witness", "--help"}).out.find("universe") != std::string::npos);
}
