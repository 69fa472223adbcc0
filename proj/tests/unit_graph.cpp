#include <doctest.h>

#include "oracles.hpp"
#include "rlab/blowup.hpp"
#include "rlab/errors.hpp"
#include "rlab/graph.hpp"
#include "rlab/rng.hpp"

using namespace rlab;

TEST_CASE("graph invariants are enforced") {
    CHECK_THROWS_AS(Graph(3, {Edge(0, 0)}), InvalidInputError);
    CHECK_THROWS_AS(Graph(3, {Edge(0, 3)}), InvalidInputError);
    CHECK_THROWS_AS(Graph(3, {Edge(0, 1), Edge(1, 0)}), InvalidInputError);
    Graph g(4, {Edge(2, 0), Edge(1, 3)});
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(0, 2));
    CHECK(g.edge_index(Edge(0, 2)) == 0);
    CHECK(g.edge_index(Edge(0, 1)) == -1);
}

TEST_CASE("text format round trip and errors") {
    Graph g = parse_graph("4 3\n0 1\n1 2\n2 3\n");
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(parse_graph(graph_to_text(g)) == g);
    CHECK_THROWS_WITH_AS(parse_graph("2 1\n0 2\n"), doctest::Contains("line 2"), InvalidInputError);
    CHECK_THROWS_AS(parse_graph("2 2\n0 1\n"), InvalidInputError);
    CHECK_THROWS_AS(parse_graph(""), InvalidInputError);
}

TEST_CASE("graph6 header parsing") {
    // K_4 in graph6 is "C~"
    Graph g = parse_graph(">>graph6<<C~\n");
    CHECK(g == Graph::complete(4));
    Graph p = parse_graph(">>graph6<<DQc");
    CHECK(p.vertex_count() == 5);
}

TEST_CASE("colouring basics") {
    Graph g = Graph::complete(3);
    EdgeColouring c(3, 2);
    c.set(0, 1, 0);
    CHECK_FALSE(c.total_on(g));
    c.set(0, 2, 1);
    c.set(1, 2, 1);
    CHECK(c.total_on(g));
    CHECK(c.get(2, 0) == 1);
    CHECK_THROWS_AS(c.set(0, 1, 2), InvalidInputError);
    CHECK_THROWS_AS(parse_colouring("0 1 5\n", 3, 2), InvalidInputError);
    CHECK_THROWS_WITH_AS(parse_colouring("0 1 0\n0 4 1\n", 3, 2), doctest::Contains("line 2"),
                         InvalidInputError);
}

TEST_CASE("blowup of K_3 with multiplicity 2 is the complete tripartite 2,2,2") {
    BlownGraph bl = blowup(Graph::complete(3), BlowupSpec::uniform(3, 2));
    CHECK(bl.graph.vertex_count() == 6);
    CHECK(bl.graph.edge_count() == 12);
    for (int x = 0; x < 3; ++x) {
        CHECK(bl.part[x].size() == 2);
        CHECK_FALSE(bl.graph.adjacent(bl.part[x][0], bl.part[x][1]));
    }
    CHECK(bl.origin[0] == std::pair(0, 1));
    CHECK(bl.origin[1] == std::pair(0, 2));
}

TEST_CASE("blowup of K_2 is complete bipartite") {
    BlownGraph bl = blowup(Graph::complete(2), BlowupSpec::uniform(2, 4));
    CHECK(bl.graph.canonical_form() == Graph::complete_bipartite(4, 4).canonical_form());
}

TEST_CASE("blowup with multiplicity one is the graph itself") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = oracle::random_graph(2 + static_cast<int>(rng.below(5)),
                                       static_cast<int>(rng.below(9)), rng);
        BlownGraph bl = blowup(g, BlowupSpec::uniform(g.vertex_count(), 1));
        CHECK(bl.graph.canonical_form() == g.canonical_form());
    }
}

TEST_CASE("blowup edge count matches the multiplicity product sum") {
    Rng rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = oracle::random_graph(2 + static_cast<int>(rng.below(5)),
                                       static_cast<int>(rng.below(9)), rng);
        BlowupSpec spec;
        for (int v = 0; v < g.vertex_count(); ++v)
            spec.multiplicity.push_back(1 + static_cast<int>(rng.below(3)));
        long long expect = 0;
        for (Edge e : g.edges())
            expect += static_cast<long long>(spec.multiplicity[e.u]) * spec.multiplicity[e.v];
        CHECK(blowup(g, spec).graph.edge_count() == expect);
    }
}

TEST_CASE("invalid blowup specs are rejected") {
    Graph g = Graph::complete(3);
    CHECK_THROWS_AS(blowup(g, BlowupSpec{{1, 1}}), InvalidInputError);
    CHECK_THROWS_AS(blowup(g, BlowupSpec{{1, 0, 1}}), InvalidInputError);
}

TEST_CASE("lifting colours every blown block in the base colour") {
    Graph g = Graph::complete(3);
    EdgeColouring c(3, 2);
    c.set(0, 1, 0);
    c.set(0, 2, 1);
    c.set(1, 2, 0);
    EdgeColouring lifted = lift_colouring(c, g, BlowupSpec::uniform(3, 3));
    BlownGraph bl = blowup(g, BlowupSpec::uniform(3, 3));
    for (int p : bl.part[0])
        for (int q : bl.part[2]) CHECK(lifted.get(p, q) == 1);
    for (int p : bl.part[0])
        for (int q : bl.part[1]) CHECK(lifted.get(p, q) == 0);

    EdgeColouring partial(3, 2);
    partial.set(0, 1, 0);
    CHECK_THROWS_AS(lift_colouring(partial, g, BlowupSpec::uniform(3, 2)), PreconditionError);
}

TEST_CASE("parsers reject garbage without crashing") {
    Rng rng(71);
    const std::string alphabet = "0123456789 \n-#abz>";
    for (int trial = 0; trial < 2000; ++trial) {
        std::string s;
        int len = static_cast<int>(rng.below(40));
        for (int i = 0; i < len; ++i) s += alphabet[rng.below(alphabet.size())];
        try {
            parse_graph(s);
        } catch (const InvalidInputError&) {
        }
        try {
            parse_colouring(s, 5, 2);
        } catch (const InvalidInputError&) {
        }
    }
}

TEST_CASE("all-red lift of K_3 stays all red") {
    Graph g = Graph::complete(3);
    EdgeColouring c(3, 2);
    for (Edge e : g.edges()) c.set(e, 0);
    EdgeColouring lifted = lift_colouring(c, g, BlowupSpec::uniform(3, 2));
    CHECK(lifted.assigned_count() == 12);
    BlownGraph bl = blowup(g, BlowupSpec::uniform(3, 2));
    for (Edge e : bl.graph.edges()) CHECK(lifted.get(e) == 0);
}
