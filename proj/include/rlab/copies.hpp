#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rlab/blowup.hpp"
#include "rlab/colouring.hpp"
#include "rlab/graph.hpp"

namespace rlab {

// One copy of a pattern in a host. Copies are identified by their edge sets;
// vertex_map keeps one representative embedding.
struct CopyEmbedding {
    std::vector<Edge> edge_set;  // sorted
    std::vector<int> vertex_map; // pattern vertex -> host vertex
};

// All copies of `pattern` in `host` (subgraph copies, deduplicated by edge
// set), in lexicographic edge-set order.
std::vector<CopyEmbedding> enumerate_copies(const Graph& pattern, const Graph& host);

// Does the bipartite block between `left` and `right` contain a complete
// K_{a,b} wholly in `colour` (a on the left side)? Fills the witness sides.
bool mono_biclique_exists(const EdgeColouring& c, const std::vector<int>& left,
                          const std::vector<int>& right, int colour, int a, int b,
                          std::vector<int>* left_out = nullptr,
                          std::vector<int>* right_out = nullptr);

// Monochromatic canonical copy of pattern[t]: a base copy plus a t-subset of
// each blown part, all blocks in one colour.
struct MonoCanonicalWitness {
    int colour = 0;
    CopyEmbedding base_copy;
    // (base vertex, chosen blown vertices), in base-vertex order
    std::vector<std::pair<int, std::vector<int>>> selection;
};

// First witness in deterministic order (base copies lexicographic, then
// colours increasing), or nullopt. c must be total on blown.graph and t must
// not exceed any multiplicity.
std::optional<MonoCanonicalWitness> find_mono_canonical(const BlownGraph& blown,
                                                        const EdgeColouring& c,
                                                        const Graph& pattern, int t);

// Every witness, same order. Used by the recolouring verifier.
std::vector<MonoCanonicalWitness> list_mono_canonical(const BlownGraph& blown,
                                                      const EdgeColouring& c,
                                                      const Graph& pattern, int t);

} // namespace rlab
