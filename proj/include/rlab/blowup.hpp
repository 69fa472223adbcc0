#pragma once

#include <utility>
#include <vector>

#include "rlab/colouring.hpp"
#include "rlab/graph.hpp"

namespace rlab {

// Multiplicity per base vertex; all multiplicities >= 1.
struct BlowupSpec {
    std::vector<int> multiplicity;

    static BlowupSpec uniform(int base_vertices, int t) {
        return BlowupSpec{std::vector<int>(base_vertices, t)};
    }
    int min_multiplicity() const;
    void validate_for(const Graph& base) const;
};

// G[{m(x)}] with the origin map back to the base. Blown vertices are laid out
// in base-vertex order, then index.
struct BlownGraph {
    Graph graph;
    Graph base;
    BlowupSpec spec;
    std::vector<std::pair<int, int>> origin; // blown vertex -> (base vertex, index 1..m(x))
    std::vector<std::vector<int>> part;      // base vertex -> blown vertices
};

BlownGraph blowup(const Graph& base, const BlowupSpec& spec);

// Every blown edge takes its base edge's colour; c must be total on base.
EdgeColouring lift_colouring(const EdgeColouring& c, const Graph& base, const BlowupSpec& spec);

} // namespace rlab
