#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <clab/gadget.hpp>
#include <clab/graph.hpp>

#include "support/properties.hpp"

#include <regex>

using namespace clab;

namespace
{
    auto error_kind(auto && f) -> std::optional<GraphErrorKind>
    {
        try {
            f();
        }
        catch (const GraphError & e) {
            return e.kind();
        }
        return std::nullopt;
    }

    auto count_matches(const std::string & text, const std::regex & re) -> std::size_t
    {
        return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
    }

    auto octahedron() -> Graph
    {
        // poles n, s; equator 0..3
        auto g = build_graph("oct", {"n", "s", "0", "1", "2", "3"},
            {{"n", "0"}, {"n", "1"}, {"n", "2"}, {"n", "3"}, {"s", "0"}, {"s", "1"}, {"s", "2"}, {"s", "3"},
                {"0", "1"}, {"1", "2"}, {"2", "3"}, {"3", "0"}});
        return g.with_rotation({{"n", {"0", "1", "2", "3"}}, {"s", {"3", "2", "1", "0"}}, {"0", {"n", "3", "s", "1"}},
            {"1", {"n", "0", "s", "2"}}, {"2", {"n", "1", "s", "3"}}, {"3", {"n", "2", "s", "0"}}});
    }
}

TEST_CASE("build_graph")
{
    auto k2 = build_graph({"u", "v"}, {{"u", "v"}});
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.edge_count() == 1);

    auto k3 = build_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    CHECK(k3.edge_count() == 3);
    CHECK(k3.vertices() == std::vector<std::string>{"a", "b", "c"});
    CHECK(k3.adjacent(0, 2));

    CHECK(error_kind([] { build_graph({"u"}, {{"u", "u"}}); }) == GraphErrorKind::loop);
    CHECK(error_kind([] { build_graph({"u", "u"}, {}); }) == GraphErrorKind::duplicate_vertex);
    CHECK(error_kind([] { build_graph({"u"}, {{"u", "q"}}); }) == GraphErrorKind::unknown_endpoint);
    CHECK(error_kind([] { build_graph({"u", "v"}, {{"u", "v"}, {"v", "u"}}); }) == GraphErrorKind::parallel_edge);
}

TEST_CASE("glue")
{
    auto k2 = build_graph({"u", "v"}, {{"u", "v"}});
    auto path = glue("P", {k2.renamed("c0"), k2.renamed("c1")}, {{0, "u", "u"}, {1, "u", "u"}}, {});
    CHECK(path.vertex_count() == 3);
    CHECK(path.edge_count() == 2);
    CHECK(path.vertices() == std::vector<std::string>{"u", "c0.v", "c1.v"});

    // both endpoints of an edge onto one shared vertex
    CHECK(error_kind([&] { glue("X", {k2}, {{0, "u", "s"}, {0, "v", "s"}}, {}); }) == GraphErrorKind::loop);
    // the same edge arriving from two parts
    CHECK(error_kind([&] {
        glue("X", {k2.renamed("a"), k2.renamed("b")}, {{0, "u", "p"}, {0, "v", "q"}, {1, "u", "p"}, {1, "v", "q"}}, {});
    }) == GraphErrorKind::parallel_edge);
}

TEST_CASE("gluing twelve gadgets")
{
    const auto & g = gadget_graph();
    std::vector<Graph> parts;
    std::vector<Identification> ids;
    for (std::size_t i = 0; i < 12; ++i) {
        parts.push_back(g.renamed("copy" + std::to_string(i)));
        ids.push_back({i, "u", "u"});
        ids.push_back({i, "u'", "u'"});
    }
    auto h = glue("H", parts, ids, {{"u", "u'"}});
    CHECK(h.vertex_count() == 12 * 16 + 2);
    CHECK(h.edge_count() == 12 * 47 + 1);
    CHECK(h.index_of("copy7.t'").has_value());
}

TEST_CASE("check_embedding")
{
    auto oct = check_embedding(octahedron());
    CHECK(oct.vertices == 6);
    CHECK(oct.edges == 12);
    CHECK(oct.faces == 8);
    CHECK(oct.genus_ok);

    auto k4 = build_graph({"0", "1", "2", "3"}, {{"0", "1"}, {"0", "2"}, {"0", "3"}, {"1", "2"}, {"1", "3"}, {"2", "3"}})
                  .with_rotation({{"0", {"1", "2", "3"}}, {"1", {"0", "3", "2"}}, {"2", {"0", "1", "3"}}, {"3", {"0", "2", "1"}}});
    auto r = check_embedding(k4);
    CHECK(r.faces == 4);
    CHECK(r.genus_ok);
    CHECK(r.directed_traversals == 12);

    auto gad = check_embedding(gadget_graph());
    CHECK(gad.vertices == 18);
    CHECK(gad.edges == 47);
    CHECK(gad.faces == 31);
    CHECK(gad.genus_ok);

    // K4 with a rotation that is not planar
    auto torus = k4.with_rotation({{"0", {"1", "2", "3"}}, {"1", {"0", "2", "3"}}, {"2", {"0", "1", "3"}}, {"3", {"0", "1", "2"}}});
    CHECK_FALSE(check_embedding(torus).genus_ok);

    CHECK(error_kind([&] { check_embedding(build_graph({"a", "b"}, {{"a", "b"}})); }) == GraphErrorKind::missing_rotation);
    CHECK(error_kind([&] { (void) k4.with_rotation({{"0", {"1", "2"}}}); }) == GraphErrorKind::invalid_rotation);
    CHECK(error_kind([&] { (void) k4.with_rotation({{"0", {"1", "2", "2"}}}); }) == GraphErrorKind::invalid_rotation);
}

TEST_CASE("export_dot")
{
    auto k2 = build_graph("K2", {"u", "v"}, {{"u", "v"}});
    auto dot = export_dot(k2);
    CHECK(dot == "graph \"K2\" {\n  \"u\";\n  \"v\";\n  \"u\" -- \"v\";\n}\n");

    auto k3 = build_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    ListAssignment L{{"a", {0, 1}}, {"b", {0, 1}}, {"c", {0, 1}}};
    auto labelled = export_dot(k3, &L);
    CHECK(labelled.find("label=\"a:{0,1}\"") != std::string::npos);
    CHECK(labelled == export_dot(k3, &L));

    auto gi = build_G(1);
    auto text = export_dot(gi.graph, &gi.lists);
    CHECK(count_matches(text, std::regex(R"(\[label=)")) == 18);
    CHECK(count_matches(text, std::regex(" -- ")) == 47);
}

TEST_CASE("glue associativity and face tracing on generated cases")
{
    auto glue_r = testing::glue_associativity(11, 200);
    CHECK_MESSAGE(glue_r.ok(200), glue_r.first_failure);
    auto euler_r = testing::euler_identity(12, 100);
    CHECK_MESSAGE(euler_r.ok(200), euler_r.first_failure);
}
