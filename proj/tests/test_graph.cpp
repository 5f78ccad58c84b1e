#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>

#include "helpers.hpp"
#include "spectra/graph.hpp"

using namespace spectra;

namespace {

Errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return Errc::IoError;
}

} // namespace

TEST_CASE("parse_graph accepts the documented format") {
    Graph k2 = parse_graph("v 2\ne 0 1");
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.edge_count() == 1);

    Graph c4 = parse_graph("v 4\ne 0 1\ne 1 2\ne 2 3\ne 3 0");
    CHECK(c4.vertex_count() == 4);
    CHECK(c4.edge_count() == 4);
    CHECK(c4.degree(0) == 2);

    Graph commented = parse_graph("# header comment\nv 2\n\n  # indented\ne 0 1\n");
    CHECK(commented.edge_count() == 1);
}

TEST_CASE("parse_graph reports distinct error codes") {
    CHECK(code_of([] { parse_graph("v 3\ne 0 1"); }) == Errc::Disconnected);
    CHECK(code_of([] { parse_graph("v 2\ne 0 0"); }) == Errc::LoopEdge);
    CHECK(code_of([] { parse_graph("v 2\ne 0 1\ne 1 0"); }) == Errc::DuplicateEdge);
    CHECK(code_of([] { parse_graph("v 2\ne 0 5"); }) == Errc::VertexOutOfRange);
    CHECK(code_of([] { parse_graph("v 2\nedge 0 1"); }) == Errc::SyntaxError);
    CHECK(code_of([] { parse_graph("e 0 1"); }) == Errc::SyntaxError);
    CHECK(code_of([] { parse_graph(""); }) == Errc::SyntaxError);
    CHECK(code_of([] { parse_graph("v 0"); }) == Errc::SyntaxError);

    try {
        parse_graph("v 2\ne 0 1 junk");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::SyntaxError);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("write_graph round-trips generated graphs") {
    for (const Graph& g : {gen_petersen(), gen_complete_bipartite(4, 3),
                           fixtures::cycle(6)}) {
        Graph back = parse_graph(write_graph(g));
        CHECK(back.vertex_count() == g.vertex_count());
        CHECK(back.edges() == g.edges());
    }
}

TEST_CASE("bipartition splits even cycles and rejects odd ones") {
    Bipartition b = bipartition(fixtures::cycle(4));
    CHECK(b.x_side == std::vector<int>{0, 2});
    CHECK(b.y_side == std::vector<int>{1, 3});

    Bipartition k2 = bipartition(parse_graph("v 2\ne 0 1"));
    CHECK(k2.x_side == std::vector<int>{0});
    CHECK(k2.y_side == std::vector<int>{1});

    try {
        bipartition(fixtures::cycle(5));
        FAIL("C_5 is not bipartite");
    } catch (const NotBipartiteError& e) {
        CHECK(e.odd_cycle().size() == 5);
        // witness closes into an odd cycle: consecutive entries adjacent
        const Graph c5 = fixtures::cycle(5);
        const auto& cyc = e.odd_cycle();
        for (size_t i = 0; i < cyc.size(); ++i) {
            int u = cyc[i];
            int v = cyc[(i + 1) % cyc.size()];
            bool adjacent = false;
            for (int edge : c5.incident_edges(u))
                adjacent = adjacent || c5.other_end(edge, u) == v;
            CHECK(adjacent);
        }
    }
}

TEST_CASE("bipartition covers every edge") {
    for (const Graph& g : {gen_complete_bipartite(4, 3), fixtures::cycle(8),
                           fixtures::path(7), gen_biregular(3, 2, 11)}) {
        Bipartition b = bipartition(g);
        for (const auto& [u, v] : g.edges()) CHECK(b.is_x(u) != b.is_x(v));
        CHECK(b.x_side.size() + b.y_side.size() ==
              static_cast<size_t>(g.vertex_count()));
    }
}

TEST_CASE("degree_profile") {
    DegreeProfile petersen = degree_profile(gen_petersen());
    CHECK(petersen.max_degree == 3);
    CHECK(petersen.is_regular);

    Graph k34 = gen_complete_bipartite(4, 3);
    Bipartition b = bipartition(k34);
    DegreeProfile profile = degree_profile(k34, &b);
    REQUIRE(profile.biregular.has_value());
    CHECK(*profile.biregular == std::make_pair(3, 4));

    DegreeProfile p3 = degree_profile(fixtures::path(3));
    CHECK(p3.max_degree == 2);
    CHECK_FALSE(p3.is_regular);
}

TEST_CASE("gen_complete_bipartite shapes") {
    Graph k2 = gen_complete_bipartite(1, 1);
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.edge_count() == 1);

    Graph k32 = gen_complete_bipartite(3, 2);
    CHECK(k32.vertex_count() == 5);
    CHECK(k32.edge_count() == 6);

    Graph k34 = gen_complete_bipartite(4, 3);
    CHECK(k34.vertex_count() == 7);
    CHECK(k34.edge_count() == 12);
    for (int v = 0; v < 4; ++v) CHECK(k34.degree(v) == 3);
    for (int v = 4; v < 7; ++v) CHECK(k34.degree(v) == 4);
}

TEST_CASE("gen_petersen") {
    Graph g = gen_petersen();
    CHECK(g.vertex_count() == 10);
    CHECK(g.edge_count() == 15);
    CHECK(degree_profile(g).is_regular);
    CHECK(g.max_degree() == 3);
    CHECK_THROWS_AS(bipartition(g), NotBipartiteError);
}

TEST_CASE("gen_biregular degrees, size and determinism") {
    Graph g = gen_biregular(3, 2, 1);
    CHECK(g.vertex_count() == 10);
    CHECK(g.edge_count() == 12);
    for (int v = 0; v < 6; ++v) CHECK(g.degree(v) == 2);
    for (int v = 6; v < 10; ++v) CHECK(g.degree(v) == 3);

    Graph again = gen_biregular(3, 2, 1);
    CHECK(again.edges() == g.edges());
    Graph other = gen_biregular(3, 2, 2);
    CHECK(other.edge_count() == 12); // different seed still valid

    // only one simple (3,4)-biregular graph exists on 4+3 vertices
    Graph k34 = gen_biregular(4, 1, 99);
    CHECK(k34.vertex_count() == 7);
    CHECK(k34.edge_count() == 12);
    std::set<std::pair<int, int>> want;
    for (int x = 0; x < 4; ++x)
        for (int y = 4; y < 7; ++y) want.insert({x, y});
    std::set<std::pair<int, int>> got(k34.edges().begin(), k34.edges().end());
    CHECK(got == want);

    // likewise K_{2,3} at k=3, m=1
    Graph k23 = gen_biregular(3, 1, 5);
    CHECK(k23.vertex_count() == 5);
    CHECK(k23.edge_count() == 6);
}

TEST_CASE("degree sum equals twice the edge count") {
    for (const Graph& g : {gen_petersen(), gen_biregular(4, 2, 3),
                           gen_complete_bipartite(5, 2), fixtures::complete(5)}) {
        int sum = 0;
        for (int v = 0; v < g.vertex_count(); ++v) sum += g.degree(v);
        CHECK(sum == 2 * g.edge_count());
    }
}

TEST_CASE("single-vertex graph parses") {
    Graph g = parse_graph("v 1");
    CHECK(g.vertex_count() == 1);
    CHECK(g.edge_count() == 0);
}
