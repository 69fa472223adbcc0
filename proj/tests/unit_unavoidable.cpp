#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "rlab/errors.hpp"
#include "rlab/unavoidable.hpp"

using namespace rlab;

namespace {

ColouredClique two_vertex(int c0, int c1, int ce) {
    ColouredClique p(2, 2);
    p.set_vertex_colour(0, c0);
    p.set_vertex_colour(1, c1);
    p.set_edge_colour(0, 1, ce);
    return p;
}

// brute force all coloured cliques on <= max_k vertices, filter by
// is_r_minimal, dedup canonically
std::set<std::vector<std::uint8_t>> naive_minimal(int r, int max_k) {
    std::set<std::vector<std::uint8_t>> out;
    for (int k = 1; k <= max_k; ++k) {
        long long total = 1;
        for (int i = 0; i < k + k * (k - 1) / 2; ++i) total *= r;
        for (long long code = 0; code < total; ++code) {
            ColouredClique p(k, r);
            long long rem = code;
            for (int v = 0; v < k; ++v) {
                p.set_vertex_colour(v, static_cast<int>(rem % r));
                rem /= r;
            }
            for (int u = 0; u < k; ++u)
                for (int v = u + 1; v < k; ++v) {
                    p.set_edge_colour(u, v, static_cast<int>(rem % r));
                    rem /= r;
                }
            if (is_r_minimal(p, r)) out.insert(p.canonical_form(false));
        }
    }
    return out;
}

EdgeColouring host_from_clique(const ColouredClique& c) {
    EdgeColouring host(c.order(), c.colours());
    for (int u = 0; u < c.order(); ++u)
        for (int v = u + 1; v < c.order(); ++v) host.set(u, v, c.edge_colour(u, v));
    return host;
}

} // namespace

TEST_CASE("minimality of the named two-vertex patterns") {
    CHECK(is_r_minimal(two_vertex(0, 0, 1), 2));
    CHECK_FALSE(is_r_minimal(two_vertex(0, 0, 0), 2));
    ColouredClique single(1, 1);
    CHECK(is_r_minimal(single, 1));
}

TEST_CASE("one-colour enumeration is the single vertex") {
    std::vector<ColouredClique> out = enumerate_r_minimal(1);
    REQUIRE(out.size() == 1);
    CHECK(out[0].order() == 1);
    CHECK(out[0].vertex_colour(0) == 0);
}

TEST_CASE("two-colour enumeration gives the four fixed-colour patterns") {
    std::vector<ColouredClique> out = enumerate_r_minimal(2);
    REQUIRE(out.size() == 4);
    std::set<std::vector<std::uint8_t>> got;
    for (const ColouredClique& p : out) {
        CHECK(p.order() == 2);
        CHECK(is_r_minimal(p, 2));
        got.insert(p.canonical_form(false));
    }
    std::set<std::vector<std::uint8_t>> expect{
        two_vertex(0, 0, 1).canonical_form(false), two_vertex(1, 1, 0).canonical_form(false),
        two_vertex(0, 1, 0).canonical_form(false), two_vertex(0, 1, 1).canonical_form(false)};
    CHECK(got == expect);
}

TEST_CASE("two-colour enumeration matches the naive oracle up to four vertices") {
    std::set<std::vector<std::uint8_t>> expect = naive_minimal(2, 4);
    std::set<std::vector<std::uint8_t>> got;
    for (const ColouredClique& p : enumerate_r_minimal(2)) got.insert(p.canonical_form(false));
    CHECK(got == expect);
}

TEST_CASE("every minimal graph respects the 2r vertex bound") {
    for (int r = 1; r <= 3; ++r)
        for (const ColouredClique& p : enumerate_r_minimal(r)) {
            CHECK(p.order() <= 2 * r);
            CHECK(is_r_minimal(p, r));
        }
}

TEST_CASE("three-colour enumeration matches the naive oracle up to five vertices") {
    std::set<std::vector<std::uint8_t>> expect = naive_minimal(3, 5);
    std::set<std::vector<std::uint8_t>> got;
    for (const ColouredClique& p : enumerate_r_minimal(3))
        if (p.order() <= 5) got.insert(p.canonical_form(false));
    CHECK(got == expect);
    CHECK(got.size() == 41); // all three-colour minimal patterns have at most 4 vertices
}

TEST_CASE("family members are pairwise non-isomorphic") {
    UnavoidableFamily fam = unavoidable_family(3, 2);
    for (std::size_t i = 0; i < fam.members.size(); ++i)
        for (std::size_t j = i + 1; j < fam.members.size(); ++j)
            CHECK_FALSE(
                coloured_clique_isomorphism(fam.members[i], fam.members[j], true).has_value());
}

TEST_CASE("coloured blowups") {
    ColouredClique p = two_vertex(0, 0, 1);
    ColouredClique b = coloured_blowup(p, 3);
    CHECK(b.order() == 6);
    // two red triangles joined by a blue complete bipartite graph
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            CHECK(b.edge_colour(i, j) == 0);
            CHECK(b.edge_colour(3 + i, 3 + j) == 0);
        }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(b.edge_colour(i, 3 + j) == 1);

    ColouredClique single(1, 2);
    single.set_vertex_colour(0, 0);
    ColouredClique red_k4 = coloured_blowup(single, 4);
    CHECK(red_k4.order() == 4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) CHECK(red_k4.edge_colour(u, v) == 0);

    // t = 1 is the identity
    CHECK(coloured_blowup(p, 1) == p);
}

TEST_CASE("the (2,2) family has four members within the vertex bound") {
    UnavoidableFamily fam = unavoidable_family(2, 2);
    CHECK(fam.members.size() == 4);
    for (const ColouredClique& m : fam.members) CHECK(m.order() <= 2 * 2 * 2);
    CHECK_THROWS_AS(unavoidable_family(2, 1), PreconditionError);
    // r = 1 is allowed: the family is the single monochromatic clique
    UnavoidableFamily mono = unavoidable_family(1, 3);
    REQUIRE(mono.members.size() == 1);
    CHECK(mono.members[0].order() == 3);
}

TEST_CASE("family members span all colours through their edges") {
    for (int r = 1; r <= 3; ++r)
        for (int t = 2; t <= 3; ++t) {
            UnavoidableFamily fam = unavoidable_family(r, t);
            for (const ColouredClique& m : fam.members) {
                CHECK(m.order() <= 2 * r * t);
                std::uint32_t edge_span = 0;
                for (int u = 0; u < m.order(); ++u)
                    for (int v = u + 1; v < m.order(); ++v) edge_span |= 1u << m.edge_colour(u, v);
                CHECK(edge_span == (1u << r) - 1);
            }
        }
}

TEST_CASE("every member is detected in its own colouring") {
    for (int r = 1; r <= 3; ++r)
        for (int t = 2; t <= 3; ++t) {
            UnavoidableFamily fam = unavoidable_family(r, t);
            for (const ColouredClique& m : fam.members) {
                std::optional<Detection> det = detect_unavoidable(host_from_clique(m), fam);
                REQUIRE(det.has_value());
                // the found member embeds with matching edge colours
                for (int u = 0; u < det->member.order(); ++u)
                    for (int v = u + 1; v < det->member.order(); ++v)
                        CHECK(m.edge_colour(det->embedding[u], det->embedding[v]) ==
                              det->member.edge_colour(u, v));
            }
        }
}

TEST_CASE("monochromatic hosts contain no two-colour pattern") {
    EdgeColouring host(20, 2);
    for (int u = 0; u < 20; ++u)
        for (int v = u + 1; v < 20; ++v) host.set(u, v, 0);
    CHECK_FALSE(detect_unavoidable(host, 2, 2).has_value());
}

TEST_CASE("the split-clique colouring holds the double-clique pattern") {
    // colour 0 induces two disjoint K_t, colour 1 everything between
    int t = 2;
    EdgeColouring host(2 * t, 2);
    for (int u = 0; u < 2 * t; ++u)
        for (int v = u + 1; v < 2 * t; ++v)
            host.set(u, v, (u < t) == (v < t) ? 0 : 1);
    std::optional<Detection> det = detect_unavoidable(host, 2, t);
    REQUIRE(det.has_value());
    // it is the blowup of the (0,0;1) pattern: all vertex colours equal
    CHECK(det->member.vertex_colour(0) == det->member.vertex_colour(det->member.order() - 1));
}

TEST_CASE("dependent random choice succeeds on complete hosts") {
    int K = 4, t = 2;
    int n = K * (6 + 1) + t + 4;
    std::optional<RichSet> rich = drc_rich_set(Graph::complete(n), K, t, 7);
    REQUIRE(rich.has_value());
    CHECK(rich_set_valid(Graph::complete(n), *rich, K, t));
    CHECK(rich->neighbourhoods.size() == 6);
}

TEST_CASE("dependent random choice fails on edgeless hosts") {
    CHECK_FALSE(drc_rich_set(Graph(30, {}), 3, 2, 5, 8).has_value());
    CHECK_THROWS_AS(drc_rich_set(Graph::complete(9), 1, 2, 0), PreconditionError);
}

TEST_CASE("rich sets on dense random graphs verify exhaustively") {
    int found = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Rng rng(derive_seed(99, seed));
        Graph g = oracle::random_graph(200, 8486, rng); // about 3 * 200^{1.5}
        std::optional<RichSet> rich = drc_rich_set(g, 4, 2, seed);
        if (rich) {
            ++found;
            CHECK(rich_set_valid(g, *rich, 4, 2));
        }
    }
    CHECK(found >= 45); // empirical: at least 0.9 of seeded runs
}

TEST_CASE("bi-ramsey refinement on monochromatic and random hosts") {
    CliquePairColouring all0 = CliquePairColouring::blank(4, 4, 2);
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            all0.set_first(a, b, 0);
            all0.set_second(a, b, 0);
        }
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) all0.set_cross(a, b, 0);
    std::optional<BiRamseyWitness> w = bi_ramsey_refine(all0, 2, 2);
    REQUIRE(w.has_value());
    CHECK(w->a == std::vector<int>{0, 1});
    CHECK(w->b == std::vector<int>{0, 1});
    CHECK(w->colour_a == 0);
    CHECK(w->colour_b == 0);
    CHECK(w->colour_cross == 0);

    // s = t = 1: vacuously monochromatic parts
    std::optional<BiRamseyWitness> w1 = bi_ramsey_refine(all0, 1, 1);
    REQUIRE(w1.has_value());
    CHECK(w1->a.size() == 1);
    CHECK(w1->colour_a == -1);
}

TEST_CASE("host size 18 always suffices for two colours at s=t=2") {
    // the pinned bound: monochromatic K_{2,2} exists in any 2-coloured
    // K_{5,5}, so 18 is comfortable; checked over 100 seeded colourings with
    // every witness re-verified
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Rng rng(derive_seed(123, seed));
        CliquePairColouring x = CliquePairColouring::blank(18, 18, 2);
        for (int a = 0; a < 18; ++a)
            for (int b = a + 1; b < 18; ++b) {
                x.set_first(a, b, static_cast<int>(rng.below(2)));
                x.set_second(a, b, static_cast<int>(rng.below(2)));
            }
        for (int a = 0; a < 18; ++a)
            for (int b = 0; b < 18; ++b) x.set_cross(a, b, static_cast<int>(rng.below(2)));
        std::optional<BiRamseyWitness> w = bi_ramsey_refine(x, 2, 2);
        REQUIRE(w.has_value());
        CHECK(x.first_colour(w->a[0], w->a[1]) == w->colour_a);
        CHECK(x.second_colour(w->b[0], w->b[1]) == w->colour_b);
        for (int a : w->a)
            for (int b : w->b) CHECK(x.cross_colour(a, b) == w->colour_cross);
    }
}

TEST_CASE("pipeline finds the pattern on a planted blowup with a noise ring") {
    // two colour-0 cliques of 100 joined in colour 1, plus a colour-0 ring
    int n = 200;
    EdgeColouring host(n, 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) host.set(u, v, (u < 100) == (v < 100) ? 0 : 1);
    for (int v = 0; v < n; ++v) host.set(v, (v + 1) % n, 0);

    PipelineParams params;
    params.set_sizes = {6, 4};
    params.neighbourhood_size = 4;
    PipelineResult res = constructive_find(host, 2, 2, 3, params);
    INFO(res.reason);
    REQUIRE(res.found.has_value());
    // agrees with plain detection
    CHECK(detect_unavoidable(host, 2, 2).has_value());
}

TEST_CASE("pipeline reports insufficient density on a starved colour") {
    int n = 24;
    EdgeColouring host(n, 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) host.set(u, v, 0);
    host.set(0, 1, 1); // a single edge of colour 1
    PipelineResult res = constructive_find(host, 2, 2, 1);
    CHECK_FALSE(res.found.has_value());
    CHECK(res.reason.find("insufficient density") != std::string::npos);
}

TEST_CASE("pipeline success implies detector success on random dense hosts") {
    PipelineParams params;
    params.set_sizes = {3, 3};
    params.neighbourhood_size = 7;
    UnavoidableFamily fam = unavoidable_family(2, 2);
    int successes = 0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Rng rng(derive_seed(5151, seed));
        EdgeColouring host(96, 2);
        for (int u = 0; u < 96; ++u)
            for (int v = u + 1; v < 96; ++v) host.set(u, v, static_cast<int>(rng.below(2)));
        PipelineResult res = constructive_find(host, 2, 2, seed, params);
        if (res.found) {
            ++successes;
            CHECK(detect_unavoidable(host, fam).has_value());
        }
    }
    // the desk-sized parameters succeed on a real fraction of random hosts,
    // so the implication above is exercised non-vacuously
    CHECK(successes >= 1);
    MESSAGE("pipeline successes: ", successes, "/30");
}

TEST_CASE("density experiment validates its configuration") {
    DensityExperimentConfig cfg;
    cfg.n = 16;
    cfg.colours = 2;
    cfg.t = 2;
    cfg.trials = 0;
    cfg.min_edges_per_colour = 10;
    CHECK_THROWS_AS(density_experiment(cfg), InvalidInputError);
    cfg.trials = 1;
    cfg.min_edges_per_colour = 16 * 15 / 2 + 1; // above the edge count
    CHECK_THROWS_AS(density_experiment(cfg), InvalidInputError);
    cfg.n = 7; // below 2rt
    cfg.min_edges_per_colour = 5;
    CHECK_THROWS_AS(density_experiment(cfg), InvalidInputError);
}

TEST_CASE("density experiment on a small instance records replayable seeds") {
    DensityExperimentConfig cfg;
    cfg.n = 16;
    cfg.colours = 2;
    cfg.t = 2;
    cfg.min_edges_per_colour = 40;
    cfg.trials = 8;
    cfg.seed = 11;
    DensityExperimentReport rep = density_experiment(cfg);
    CHECK(rep.trials.size() == 8);
    CHECK_FALSE(rep.adjusted);
    for (const TrialOutcome& t : rep.trials) {
        REQUIRE(t.attempts >= 1);
        // replay: regenerate the accepted colouring from the recorded seed
        Rng rng(t.seed);
        EdgeColouring col(cfg.n, 2);
        long long c0 = 0;
        for (int u = 0; u < cfg.n; ++u)
            for (int v = u + 1; v < cfg.n; ++v) {
                int c = static_cast<int>(rng.below(2));
                col.set(u, v, c);
                c0 += c == 0;
            }
        CHECK(c0 >= 40);
        CHECK((cfg.n * (cfg.n - 1) / 2 - c0) >= 40);
        CHECK(detect_unavoidable(col, 2, 2).has_value() == t.success);
    }
}

TEST_CASE("coloured clique file format round trip") {
    ColouredClique p = two_vertex(0, 1, 1);
    CHECK(parse_coloured_clique(coloured_clique_to_text(p)) == p);
    CHECK_THROWS_AS(parse_coloured_clique("2 2\n0 5\n0 1 0\n"), InvalidInputError);
    CHECK_THROWS_AS(parse_coloured_clique("2 2\n0 1\n"), InvalidInputError);
}
