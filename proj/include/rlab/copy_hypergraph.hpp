#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rlab/copies.hpp"
#include "rlab/graph.hpp"

namespace rlab {

// H(G): vertices are the edges of G, hyperedges are the edge sets of copies
// of H in G. Uniform of size |E(H)|.
struct CopyHypergraph {
    std::vector<Edge> vertices;             // edges of G, lexicographic
    std::vector<std::vector<int>> hyperedges; // sorted vertex indices
    int uniformity = 0;
};

CopyHypergraph build_copy_hypergraph(const Graph& pattern, const Graph& host);

struct Girth {
    bool finite = false;
    int value = 0;
    static Girth infinite() { return {}; }
    static Girth of(int v) { return {true, v}; }
    bool operator==(const Girth&) const = default;
};

// A 2-cycle is two hyperedges sharing >= 2 vertices; longer cycles are Berge
// cycles: distinct hyperedges e_1..e_k linked by pairwise-distinct vertices
// x_i in e_i ∩ e_{i+1}.
struct BergeCycle {
    std::vector<int> hyperedges;
    std::vector<int> link_vertices; // for a 2-cycle: the (>=2) shared vertices
};

struct GirthResult {
    Girth girth;
    std::optional<BergeCycle> witness;
};

GirthResult girth_with_witness(const std::vector<std::vector<int>>& hyperedges);
Girth girth(const CopyHypergraph& hg);

// |V(H)| >= 3 and deleting any bipartite-inducing vertex set leaves the graph
// connected (the empty and one-vertex graphs count as connected).
bool is_3_chromatically_connected(const Graph& g);

struct RecolouringPreconditions {
    bool girth_ok = false;
    Girth copy_girth;
    std::optional<BergeCycle> short_cycle;
    bool min_degree_ok = false;
    int pattern_min_degree = 0;
    std::optional<int> low_degree_vertex;
    bool ok() const { return girth_ok && min_degree_ok; }
};

// girth(H(host)) > 2s+2 and min degree of the pattern >= 2. Arrowing
// minimality is not checked here.
RecolouringPreconditions verify_recolouring_preconditions(const Graph& host, const Graph& pattern,
                                                          int s);

// Dump format: one line of space-separated vertex indices per hyperedge.
std::vector<std::vector<int>> parse_hypergraph(const std::string& content);
std::string hypergraph_to_text(const std::vector<std::vector<int>>& hyperedges);

} // namespace rlab
