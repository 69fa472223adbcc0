#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rlab/arrowing.hpp"
#include "rlab/blowup.hpp"
#include "rlab/colouring.hpp"
#include "rlab/copies.hpp"
#include "rlab/graph.hpp"

namespace rlab {

// All copies of the tree whose already-coloured edges are all `colour`
// (uncoloured edges are unconstrained). The host colouring may be partial.
std::vector<CopyEmbedding> possible_monochromatic_copies(const Graph& tree, const Graph& host,
                                                         const PartialColouring& c, int colour);

// f given as a table over the multiplicities in use; f(m) in [1, m] and
// non-decreasing where tabulated.
struct CoherenceSpec {
    PartialColouring base_colouring; // on the base graph, 2 colours
    BlowupSpec spec;
    std::map<int, int> f_table;

    int f(int m) const;
    void validate_for(const Graph& base) const;
};

struct CoherenceViolation {
    Edge base_edge;
    int base_colour = 0;           // the colour c gives the base edge
    std::vector<int> left, right;  // an opposite-coloured K_{f(m(x)),f(m(y))}
};

// A blowup colouring is f-coherent when no coloured base edge's block holds a
// complete bipartite K_{f(m(x)),f(m(y))} of the opposite colour. Returns the
// first violation in deterministic order.
std::pair<bool, std::optional<CoherenceViolation>> is_f_coherent(const EdgeColouring& blown,
                                                                 const Graph& base,
                                                                 const CoherenceSpec& cs);

// Instance for the two-tree witness search: a tree, a subtree, the attachment
// edge, and k embeddings of the tree whose subtree restriction puts z in the
// attachment's role.
struct Tree2Instance {
    Graph tree;
    std::vector<int> subtree_vertices; // induce the subtree in `tree`
    Edge attachment;                   // in E(tree) minus the subtree, one end inside
    Graph host;
    PartialColouring colouring; // partial, 2 colours
    int z = 0;
    std::vector<std::vector<int>> copy_maps; // tree vertex -> host vertex, one per copy
};

// First pair i<j (1-based, lexicographic) whose recombined copy
// subtree_i ∪ (copy_j minus subtree_j) is again a possible monochromatic copy
// of the tree, of the same colour as copies i and j.
std::optional<std::pair<int, int>> lemma_tree2_witness(const Tree2Instance& inst);

struct TreeTableRow {
    int index = 0;
    bool applicable = false;           // ground graph arrows the tree
    std::optional<int> value;          // blowup Ramsey number within the ceiling
    std::uint64_t nodes = 0;
};

// Blowup Ramsey numbers of one tree over several ground graphs, for probing
// ground-graph independence at small scale.
std::vector<TreeTableRow> tree_blowup_ramsey_table(const std::vector<Graph>& grounds,
                                                   const Graph& tree, int r, int t, int n_max,
                                                   const SearchLimits& limits = {});

} // namespace rlab
