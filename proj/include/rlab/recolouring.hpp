#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rlab/blowup.hpp"
#include "rlab/colouring.hpp"
#include "rlab/copies.hpp"
#include "rlab/graph.hpp"

namespace rlab {

struct Triangle {
    std::array<int, 3> vertices{}; // ascending
    std::array<Edge, 3> edges() const {
        return {Edge(vertices[0], vertices[1]), Edge(vertices[0], vertices[2]),
                Edge(vertices[1], vertices[2])};
    }
    bool contains(Edge e) const {
        for (Edge f : edges())
            if (f == e) return true;
        return false;
    }
    bool contains(int v) const {
        return vertices[0] == v || vertices[1] == v || vertices[2] == v;
    }
    auto operator<=>(const Triangle&) const = default;
};

// The monochromatic-triangle sets collected during the iterated recolouring
// must pairwise overlap only in the step's recoloured edge; anything else
// witnesses a short cycle in the copy hypergraph.
struct DisjointnessViolation {
    Triangle first, second;
    int first_step = 0, second_step = 0;
    std::vector<Edge> shared_edges;
};

struct DisjointnessCertificate {
    bool ok = true;
    std::optional<DisjointnessViolation> violation;
};

struct RecolouringStructureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DisjointnessError : RecolouringStructureError {
    DisjointnessCertificate certificate;
    explicit DisjointnessError(DisjointnessCertificate cert, const std::string& what)
        : RecolouringStructureError(what), certificate(std::move(cert)) {}
};

// Stage 1: colourings c_0..c_s of the base graph, the recoloured sets
// E_0..E_s and the monochromatic triangle sets T_0..T_s.
struct StageOneTrace {
    Graph g;
    Edge start_edge;
    int pivot = 0;
    int steps = 0;
    std::vector<EdgeColouring> colourings;
    std::vector<std::vector<Edge>> recoloured;
    std::vector<std::vector<Triangle>> mono_triangles;
    DisjointnessCertificate certificate;
};

// c0 must be total with no monochromatic triangle avoiding e; recoloured
// edges take the cyclically-next colour (a flip when r = 2). Throws
// DisjointnessError when the triangle sets overlap beyond the allowed
// pattern, RecolouringStructureError on other trace-invariant failures.
StageOneTrace stage_one(const Graph& g, Edge e, int pivot, const EdgeColouring& c0, int s);

// Stage 2 transfer to g[s]: along step i, each recoloured base edge has only
// the pivot rows v_{i+1}..v_s of its block recoloured. Index 0 is the final
// lift of c_0; index i is the colouring after step i.
std::vector<EdgeColouring> stage_two_colourings(const StageOneTrace& trace);
EdgeColouring stage_two(const StageOneTrace& trace);

struct RecolouringReport {
    int s = 0;
    std::vector<MonoCanonicalWitness> violations; // every monochromatic canonical K_3[2]
    bool pass() const { return violations.empty(); }
};

// Lists every monochromatic canonical K_3[2] in the given colouring of g[s].
RecolouringReport verify_recolouring(const Graph& g, int s, const EdgeColouring& c);

struct ClaimStepReport {
    int step = 0;
    bool pass = true;
    std::vector<MonoCanonicalWitness> surviving; // copies inside some T[s], T in T_{i-1}
};

// After stage-2 step i, no monochromatic canonical K_3[2] may remain inside
// T[s] for any T in T_{i-1}.
std::vector<ClaimStepReport> verify_claim_per_step(const StageOneTrace& trace);

// Test instances: trees of triangles through a pivot. The copy hypergraph is
// Berge-acyclic, so the girth hypothesis holds for every s.
struct TriangleTreeInstance {
    Graph g;
    Edge start_edge;
    int pivot = 0;
    EdgeColouring c0;
    int depth = 0;     // longest activation chain
    int triangles = 0;
};

// chain of k triangles sharing consecutive pivot spokes (a fan)
TriangleTreeInstance make_triangle_fan(int k);
// random triangle tree with branching, depth at least min_depth
TriangleTreeInstance make_triangle_tree(std::uint64_t seed, int min_depth, int max_branch);

} // namespace rlab
