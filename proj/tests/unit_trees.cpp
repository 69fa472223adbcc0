#include <doctest.h>

#include "oracles.hpp"
#include "rlab/errors.hpp"
#include "rlab/trees.hpp"

using namespace rlab;

TEST_CASE("possible copies with an empty colouring are all copies, for each colour") {
    Graph host = Graph::complete(4);
    PartialColouring empty(4, 2);
    std::size_t all = enumerate_copies(Graph::path(3), host).size();
    CHECK(possible_monochromatic_copies(Graph::path(3), host, empty, 0).size() == all);
    CHECK(possible_monochromatic_copies(Graph::path(3), host, empty, 1).size() == all);
}

TEST_CASE("a total opposite colouring blocks every copy") {
    Graph host = Graph::complete(3);
    PartialColouring c(3, 2);
    for (Edge e : host.edges()) c.set(e, 0);
    CHECK(possible_monochromatic_copies(Graph::path(3), host, c, 1).empty());
}

TEST_CASE("one red edge filters the triangle's three paths") {
    Graph host = Graph::complete(3);
    PartialColouring c(3, 2);
    c.set(0, 1, 0);
    // oracle: copies of P_3 in K_3 whose coloured edges are all red
    int expect = 0;
    for (const auto& es : oracle::copy_edge_sets(Graph::path(3), host)) {
        bool ok = true;
        for (const Edge& e : es)
            if (c.has(e) && c.get(e) != 0) ok = false;
        expect += ok;
    }
    CHECK(static_cast<int>(possible_monochromatic_copies(Graph::path(3), host, c, 0).size()) ==
          expect);
    CHECK(expect == 3); // the uncoloured edges never disqualify a red copy
    // only the path avoiding the red edge can still be blue
    CHECK(possible_monochromatic_copies(Graph::path(3), host, c, 1).size() == 1);
}

TEST_CASE("non-trees are rejected") {
    PartialColouring c(4, 2);
    CHECK_THROWS_AS(possible_monochromatic_copies(Graph::cycle(3), Graph::complete(4), c, 0),
                    PreconditionError);
}

TEST_CASE("a copy is possible in both colours exactly when untouched by the colouring") {
    Rng rng(61);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 4 + static_cast<int>(rng.below(3));
        Graph host = oracle::random_graph(n, 3 + static_cast<int>(rng.below(8)), rng);
        PartialColouring c(n, 2);
        for (Edge e : host.edges())
            if (rng.below(3) == 0) c.set(e, static_cast<int>(rng.below(2)));
        auto red = possible_monochromatic_copies(Graph::path(3), host, c, 0);
        auto blue = possible_monochromatic_copies(Graph::path(3), host, c, 1);
        std::set<std::vector<Edge>> blue_sets;
        for (const auto& copy : blue) blue_sets.insert(copy.edge_set);
        for (const auto& copy : red) {
            bool untouched = true;
            for (Edge e : copy.edge_set)
                if (c.has(e)) untouched = false;
            CHECK(untouched == (blue_sets.count(copy.edge_set) > 0));
        }
    }
}

TEST_CASE("shrinking the colouring domain never loses possible copies") {
    Rng rng(62);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 4 + static_cast<int>(rng.below(3));
        Graph host = oracle::random_graph(n, 3 + static_cast<int>(rng.below(8)), rng);
        PartialColouring c(n, 2);
        for (Edge e : host.edges())
            if (rng.below(2) == 0) c.set(e, static_cast<int>(rng.below(2)));
        PartialColouring smaller = c;
        for (Edge e : host.edges())
            if (smaller.has(e) && rng.below(2) == 0) smaller.unset(e.u, e.v);
        for (int colour = 0; colour < 2; ++colour) {
            auto big = possible_monochromatic_copies(Graph::path(3), host, c, colour);
            auto small = possible_monochromatic_copies(Graph::path(3), host, smaller, colour);
            CHECK(big.size() <= small.size());
        }
    }
}

namespace {

CoherenceSpec make_spec(const Graph& base, const PartialColouring& c, int t, int f) {
    CoherenceSpec cs;
    cs.base_colouring = c;
    cs.spec = BlowupSpec::uniform(base.vertex_count(), t);
    cs.f_table[t] = f;
    return cs;
}

} // namespace

TEST_CASE("lifted colourings are always f-coherent") {
    Rng rng(63);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 3 + static_cast<int>(rng.below(3));
        Graph base = oracle::random_graph(n, 2 + static_cast<int>(rng.below(7)), rng);
        EdgeColouring c = oracle::random_total_colouring(base, 2, rng);
        int t = 2 + static_cast<int>(rng.below(2));
        int f = 1 + static_cast<int>(rng.below(t));
        EdgeColouring blown = lift_colouring(c, base, BlowupSpec::uniform(n, t));
        auto [ok, violation] = is_f_coherent(blown, base, make_spec(base, c, t, f));
        CHECK(ok);
        CHECK_FALSE(violation.has_value());
    }
}

TEST_CASE("an all-opposite block violates coherence immediately") {
    Graph base = Graph::complete(2);
    PartialColouring c(2, 2);
    c.set(0, 1, 0);
    BlowupSpec spec = BlowupSpec::uniform(2, 3);
    BlownGraph bl = blowup(base, spec);
    EdgeColouring blown(bl.graph.vertex_count(), 2);
    for (Edge e : bl.graph.edges()) blown.set(e, 1); // entirely blue against a red base edge
    CoherenceSpec cs = make_spec(base, c, 3, 2);
    auto [ok, violation] = is_f_coherent(blown, base, cs);
    CHECK_FALSE(ok);
    REQUIRE(violation.has_value());
    CHECK(violation->base_edge == Edge(0, 1));
    CHECK(violation->left.size() == 2);
    CHECK(violation->right.size() == 2);
}

TEST_CASE("a planted opposite biclique is found and reported") {
    Graph base = Graph::path(3); // edges (0,1), (1,2)
    PartialColouring c(3, 2);
    c.set(0, 1, 0);
    c.set(1, 2, 1);
    BlowupSpec spec = BlowupSpec::uniform(3, 4);
    EdgeColouring blown = lift_colouring(
        [&] {
            EdgeColouring total(3, 2);
            total.set(0, 1, 0);
            total.set(1, 2, 1);
            return total;
        }(),
        base, spec);
    BlownGraph bl = blowup(base, spec);
    // plant a blue K_{2,2} inside the red-labelled block (0,1)
    blown.set(bl.part[0][1], bl.part[1][2], 1);
    blown.set(bl.part[0][1], bl.part[1][3], 1);
    blown.set(bl.part[0][2], bl.part[1][2], 1);
    blown.set(bl.part[0][2], bl.part[1][3], 1);
    CoherenceSpec cs = make_spec(base, c, 4, 2);
    auto [ok, violation] = is_f_coherent(blown, base, cs);
    CHECK_FALSE(ok);
    REQUIRE(violation.has_value());
    CHECK(violation->base_edge == Edge(0, 1));
    CHECK(violation->left == std::vector<int>{bl.part[0][1], bl.part[0][2]});
    CHECK(violation->right == std::vector<int>{bl.part[1][2], bl.part[1][3]});
}

TEST_CASE("f tables are validated") {
    Graph base = Graph::complete(2);
    PartialColouring c(2, 2);
    CoherenceSpec cs;
    cs.base_colouring = c;
    cs.spec = BlowupSpec::uniform(2, 3);
    cs.f_table[3] = 4; // above m
    CHECK_THROWS_AS(cs.validate_for(base), InvalidInputError);
    cs.f_table.clear();
    cs.f_table[2] = 2;
    cs.f_table[3] = 1; // decreasing
    CHECK_THROWS_AS(cs.validate_for(base), InvalidInputError);
    cs.f_table.clear();
    CHECK_THROWS_AS(cs.validate_for(base), InvalidInputError); // missing entry
}

namespace {

// T = path 0-1-2, subtree = edge {0,1}, attachment (1,2): copies are paths
// through z = centre of a star-like host
Tree2Instance star_instance(int k, bool make_disjoint) {
    Tree2Instance inst;
    inst.tree = Graph::path(3);
    inst.subtree_vertices = {0, 1};
    inst.attachment = Edge(1, 2);
    // host: z = 0 adjacent to leaves 1..k (subtree partners) and k+1..2k (extensions)
    std::vector<Edge> es;
    for (int v = 1; v <= 2 * k; ++v) es.emplace_back(0, v);
    inst.host = Graph(2 * k + 1, es);
    inst.colouring = PartialColouring(2 * k + 1, 2);
    inst.z = 0;
    for (int i = 1; i <= k; ++i) {
        int extension = make_disjoint ? k + i : (i % k) + 1;
        inst.copy_maps.push_back({i, 0, extension});
    }
    return inst;
}

} // namespace

TEST_CASE("the disjointness branch returns the first pair") {
    Tree2Instance inst = star_instance(2, true);
    std::optional<std::pair<int, int>> res = lemma_tree2_witness(inst);
    REQUIRE(res.has_value());
    CHECK(*res == std::pair(1, 2));

    // independent re-check: the recombined map is a copy of the tree and is
    // possible monochromatic in some colour
    const std::vector<int>& mi = inst.copy_maps[res->first - 1];
    const std::vector<int>& mj = inst.copy_maps[res->second - 1];
    std::vector<bool> in_sub(inst.tree.vertex_count(), false);
    for (int v : inst.subtree_vertices) in_sub[v] = true;
    std::vector<int> rec(inst.tree.vertex_count());
    for (int v = 0; v < inst.tree.vertex_count(); ++v) rec[v] = in_sub[v] ? mi[v] : mj[v];
    std::vector<int> sorted = rec;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    bool possible_some_colour = false;
    for (int colour = 0; colour < 2 && !possible_some_colour; ++colour) {
        bool ok = true;
        for (Edge e : inst.tree.edges()) {
            if (!inst.host.adjacent(rec[e.u], rec[e.v])) ok = false;
            int col = inst.colouring.get(rec[e.u], rec[e.v]);
            if (col >= 0 && col != colour) ok = false;
        }
        possible_some_colour = ok;
    }
    CHECK(possible_some_colour);
}

TEST_CASE("a single copy has no pair") {
    CHECK_FALSE(lemma_tree2_witness(star_instance(1, true)).has_value());
}

TEST_CASE("recombined copies must be vertex disjoint outside the attachment") {
    // extensions deliberately collide with the other subtree copy
    Tree2Instance inst = star_instance(2, false);
    // copy 1 = {1,0,2}, copy 2 = {2,0,1}: recombination uses vertex 1 or 2 twice
    CHECK_FALSE(lemma_tree2_witness(inst).has_value());
}

TEST_CASE("witness pairs share a single possible colour across all three copies") {
    Tree2Instance inst = star_instance(2, true);
    // make copy 1 red-only and copy 2 blue-only: no common colour remains
    inst.colouring.set(0, 1, 0); // subtree edge of copy 1
    inst.colouring.set(0, 4, 1); // extension edge of copy 2
    CHECK_FALSE(lemma_tree2_witness(inst).has_value());
    // but a shared colour revives the pair: make both possible blue
    inst.colouring.unset(0, 1);
    CHECK(lemma_tree2_witness(inst) == std::pair(1, 2));
}

TEST_CASE("malformed instances are rejected") {
    Tree2Instance inst = star_instance(2, true);
    inst.copy_maps[0][1] = 5; // z no longer plays the attachment role
    CHECK_THROWS_AS(lemma_tree2_witness(inst), InvalidInputError);
    Tree2Instance dup = star_instance(2, true);
    dup.copy_maps[1] = dup.copy_maps[0]; // identical subtree copies
    CHECK_THROWS_AS(lemma_tree2_witness(dup), InvalidInputError);
}

TEST_CASE("the blowup table marks inapplicable ground graphs") {
    std::vector<Graph> grounds{Graph::complete(3), Graph::cycle(5), Graph::complete(2)};
    std::vector<TreeTableRow> rows = tree_blowup_ramsey_table(grounds, Graph::path(3), 2, 1, 3);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].applicable);
    CHECK(rows[0].value == 1); // t = 1
    CHECK(rows[1].applicable);
    CHECK(rows[1].value == 1);
    CHECK_FALSE(rows[2].applicable); // K_2 cannot force a two-edge path
    CHECK_FALSE(rows[2].value.has_value());
}
