#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rlab/colouring.hpp"
#include "rlab/graph.hpp"

namespace rlab {

struct SearchLimits {
    std::uint64_t node_budget = 400'000'000ULL; // decisions; exhaustion throws InconclusiveError
};

struct ArrowingResult {
    bool arrows = false;
    std::optional<EdgeColouring> witness; // verified free of monochromatic copies
    std::uint64_t nodes_explored = 0;
};

// Does every r-colouring of E(g) contain a monochromatic copy of the pattern?
// Backtracking over edges ordered by descending copy count (ties
// lexicographic), first edge fixed to colour 0 and new colours introduced
// canonically.
ArrowingResult arrows(const Graph& g, const Graph& pattern, int r, const SearchLimits& limits = {});

// g arrows but no single-edge deletion does (deletions suffice by
// monotonicity under subgraphs).
bool is_ramsey_minimal(const Graph& g, const Graph& pattern, int r, const SearchLimits& limits = {});

struct BlowupRamseyQuery {
    Graph g;
    Graph pattern;
    int colours = 2;
    int t = 1;
    int n_max = 1;
    SearchLimits limits;
};

// Least n <= n_max such that every r-colouring of g[n] has a monochromatic
// canonical pattern[t]; nullopt when no n <= n_max works. Requires
// arrows(g, pattern, r); that failing is an error, not a nullopt.
std::optional<int> blowup_ramsey_number(const BlowupRamseyQuery& q,
                                        std::uint64_t* nodes_out = nullptr);

// One rung of the ladder: a colouring of g[n] with no monochromatic canonical
// pattern[t], or nullopt when every colouring has one.
std::optional<EdgeColouring> blowup_avoiding_colouring(const Graph& g, const Graph& pattern, int r,
                                                       int t, int n,
                                                       const SearchLimits& limits = {},
                                                       std::uint64_t* nodes_out = nullptr);

namespace detail {

// DPLL-style search for a colouring avoiding every "all edges one colour"
// constraint. Edges are search variables in the given order.
class AvoidanceSearch {
public:
    AvoidanceSearch(int num_edges, int colours, std::vector<std::vector<int>> constraints,
                    std::vector<int> order);
    // nullopt when every colouring completes some constraint monochromatically
    std::optional<std::vector<int>> find_avoiding(std::uint64_t budget);
    std::uint64_t nodes() const { return nodes_; }

private:
    bool assign(int edge, int colour, std::vector<int>& forced);
    bool propagate(std::vector<int>& forced);
    void undo_to(std::size_t mark);
    bool dfs(std::size_t depth);

    int colours_;
    std::vector<std::vector<int>> cons_;
    std::vector<std::vector<int>> edge_cons_;
    std::vector<int> order_;
    std::vector<int> value_;
    std::vector<std::vector<int>> count_; // constraint x colour
    std::vector<int> unassigned_;
    std::vector<int> trail_;
    std::uint64_t nodes_ = 0;
    std::uint64_t budget_ = 0;
    bool out_of_budget_ = false;
};

} // namespace detail

} // namespace rlab
