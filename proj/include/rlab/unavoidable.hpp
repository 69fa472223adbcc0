#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rlab/colouring.hpp"
#include "rlab/graph.hpp"

namespace rlab {

// Complete graph with vertex and edge colours from {0..r-1}.
class ColouredClique {
public:
    ColouredClique() = default;
    ColouredClique(int k, int r);

    int order() const { return k_; }
    int colours() const { return r_; }
    int vertex_colour(int v) const { return vcol_[v]; }
    void set_vertex_colour(int v, int c);
    int edge_colour(int u, int v) const { return ecol_[static_cast<std::size_t>(u) * k_ + v]; }
    void set_edge_colour(int u, int v, int c);

    bool edge_colours_total() const;
    // colours present among vertices and edges of the induced sub-clique
    std::uint32_t colour_span(const std::vector<int>& subset) const;
    std::uint32_t colour_span() const;

    // vertex permutations only; colours fixed
    std::vector<std::uint8_t> canonical_form(bool edge_colours_only = false) const;
    bool operator==(const ColouredClique&) const = default;

private:
    int k_ = 0, r_ = 0;
    std::vector<std::int8_t> vcol_;
    std::vector<std::int8_t> ecol_;
};

// colour-preserving isomorphism on edge colours (vertex colours optional)
std::optional<std::vector<int>> coloured_clique_isomorphism(const ColouredClique& a,
                                                            const ColouredClique& b,
                                                            bool edge_colours_only);

// Spans all r colours; no proper induced sub-clique does.
bool is_r_minimal(const ColouredClique& p, int r);

// All r-minimal cliques up to colour-preserving isomorphism (colours not
// permuted), canonically sorted. They have at most 2r vertices.
std::vector<ColouredClique> enumerate_r_minimal(int r);

// Each vertex becomes a clique of its colour, each edge a K_{t,t} of its
// colour; blown vertices keep the base vertex colour.
ColouredClique coloured_blowup(const ColouredClique& p, int t);

struct UnavoidableFamily {
    int r = 0, t = 0;
    std::vector<ColouredClique> members;
};

// F^r_t: t-blowups of the r-minimal cliques, t >= 2, deduplicated by
// edge-coloured isomorphism.
UnavoidableFamily unavoidable_family(int r, int t);

struct Detection {
    int member_index = -1;
    ColouredClique member;
    std::vector<int> embedding; // member vertex -> host vertex
};

// Edge-colour-preserving embedding of some family member into a total
// colouring of K_n. Vertex colours of members are bookkeeping only.
std::optional<Detection> detect_unavoidable(const EdgeColouring& host, const UnavoidableFamily& family);
std::optional<Detection> detect_unavoidable(const EdgeColouring& host, int r, int t);

// Dependent random choice output: S with every t-subset X owning a reserved
// common neighbourhood C(X), the C(X) pairwise disjoint and away from S.
struct RichSet {
    std::vector<int> s;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> neighbourhoods; // (X, C(X))
};

// Seeded search: sample t vertices, prune their common neighbourhood of
// vertices in too many poor t-subsets, then carve the C(X) greedily. Every
// returned set is re-verified exhaustively.
std::optional<RichSet> drc_rich_set(const Graph& g, int set_size, int t, std::uint64_t seed,
                                    int trial_budget = 64);
bool rich_set_valid(const Graph& g, const RichSet& rich, int set_size, int t);

// Two r-edge-coloured cliques plus the bipartite edges between them.
struct CliquePairColouring {
    int r = 2;
    int n1 = 0, n2 = 0;
    std::vector<std::int8_t> first;  // n1 x n1
    std::vector<std::int8_t> second; // n2 x n2
    std::vector<std::int8_t> cross;  // n1 x n2

    static CliquePairColouring blank(int n1, int n2, int r);
    int first_colour(int a, int b) const { return first[static_cast<std::size_t>(a) * n1 + b]; }
    int second_colour(int a, int b) const { return second[static_cast<std::size_t>(a) * n2 + b]; }
    int cross_colour(int a, int b) const { return cross[static_cast<std::size_t>(a) * n2 + b]; }
    void set_first(int a, int b, int c);
    void set_second(int a, int b, int c);
    void set_cross(int a, int b, int c);
};

struct BiRamseyWitness {
    std::vector<int> a, b;                       // indices into the two sides
    int colour_a = -1, colour_b = -1, colour_cross = -1; // -1 when vacuous
};

// Monochromatic K_s in the first clique, K_t in the second, all edges between
// them monochromatic. Exact backtracking, first witness in lexicographic
// order; nullopt when the hosts are too small.
std::optional<BiRamseyWitness> bi_ramsey_refine(const CliquePairColouring& x, int s, int t);

struct PipelineParams {
    std::vector<int> set_sizes;  // |A_i| per colour; empty means 4t(r-i+1)
    int neighbourhood_size = 0;  // |C_i(T)|; 0 means 4t
    int drc_trial_budget = 64;
};

struct PipelineResult {
    std::optional<Detection> found;
    std::string reason; // non-empty when not found
    std::vector<std::string> log;
};

// The constructive route: dependent random choice per colour, then the four
// refinement stages, then assembly of the witness clique and minimisation.
// All intermediate monochromaticity properties are verified; the final result
// is cross-checked by detect_unavoidable.
PipelineResult constructive_find(const EdgeColouring& host, int r, int t, std::uint64_t seed,
                                 const PipelineParams& params = {});

struct DensityExperimentConfig {
    int n = 0;
    int colours = 2;
    int t = 2;
    long long min_edges_per_colour = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    int workers = 1;
    int max_attempts_per_trial = 10000;
};

struct TrialOutcome {
    std::uint64_t seed = 0; // replay seed for this trial
    int attempts = 0;
    bool success = false;
    int member_index = -1;
    double detect_ms = 0.0;
};

struct DensityExperimentReport {
    DensityExperimentConfig cfg;
    long long effective_min = 0; // capped at floor(total/r) so the conditioning is satisfiable
    bool adjusted = false;
    std::vector<TrialOutcome> trials;
    double success_fraction = 0.0;
    double mean_detect_ms = 0.0;
};

// Random colourings of K_n conditioned on every colour reaching the edge
// minimum (rejection sampling with derived seeds), then detection.
DensityExperimentReport density_experiment(const DensityExperimentConfig& cfg);

// File format: "k r", vertex colours, then k(k-1)/2 lines "u v c".
ColouredClique parse_coloured_clique(const std::string& content);
std::string coloured_clique_to_text(const ColouredClique& c);
ColouredClique load_coloured_clique_file(const std::string& path);

} // namespace rlab
