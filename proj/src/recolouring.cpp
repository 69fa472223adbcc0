#include "rlab/recolouring.hpp"

#include <algorithm>

#include "rlab/errors.hpp"
#include "rlab/rng.hpp"

namespace rlab {

namespace {

std::vector<Triangle> mono_triangles(const Graph& g, const EdgeColouring& c) {
    std::vector<Triangle> out;
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!g.adjacent(a, b)) continue;
            for (int d = b + 1; d < n; ++d) {
                if (!g.adjacent(a, d) || !g.adjacent(b, d)) continue;
                int col = c.get(a, b);
                if (col >= 0 && c.get(a, d) == col && c.get(b, d) == col)
                    out.push_back(Triangle{{a, b, d}});
            }
        }
    return out;
}

std::vector<Edge> shared_edges(const Triangle& s, const Triangle& t) {
    std::vector<Edge> out;
    for (Edge e : s.edges())
        if (t.contains(e)) out.push_back(e);
    return out;
}

// allowed overlaps: one shared edge, consecutive or equal steps, and the
// shared edge is the later step's recoloured edge
void check_disjointness(const std::vector<std::vector<Triangle>>& levels,
                        const std::vector<std::vector<Edge>>& recoloured, int upto) {
    for (int i = 0; i <= upto; ++i)
        for (int j = i; j <= upto; ++j)
            for (std::size_t a = 0; a < levels[i].size(); ++a) {
                std::size_t b0 = (i == j) ? a + 1 : 0;
                for (std::size_t b = b0; b < levels[j].size(); ++b) {
                    const Triangle& s = levels[i][a];
                    const Triangle& t = levels[j][b];
                    std::vector<Edge> sh = shared_edges(s, t);
                    if (sh.empty()) continue;
                    bool allowed = sh.size() == 1 && (j - i) <= 1 &&
                                   std::find(recoloured[j].begin(), recoloured[j].end(), sh[0]) !=
                                       recoloured[j].end();
                    if (!allowed) {
                        DisjointnessCertificate cert;
                        cert.ok = false;
                        cert.violation = DisjointnessViolation{s, t, i, j, sh};
                        throw DisjointnessError(
                            cert, "triangle sets overlap beyond the allowed pattern at steps " +
                                      std::to_string(i) + " and " + std::to_string(j));
                    }
                }
            }
}

} // namespace

StageOneTrace stage_one(const Graph& g, Edge e, int pivot, const EdgeColouring& c0, int s) {
    if (!g.has_edge(e)) throw PreconditionError("stage one: e is not an edge of the graph");
    if (pivot != e.u && pivot != e.v) throw PreconditionError("stage one: pivot not incident to e");
    if (s < 0) throw PreconditionError("stage one: negative step count");
    if (c0.colours() < 2) throw PreconditionError("stage one: recolouring needs at least 2 colours");
    if (!c0.total_on(g)) throw PreconditionError("stage one: c0 is not total");
    for (const Triangle& t : mono_triangles(g, c0))
        if (!t.contains(e))
            throw PreconditionError("stage one: c0 has a monochromatic triangle avoiding e");

    StageOneTrace tr;
    tr.g = g;
    tr.start_edge = e;
    tr.pivot = pivot;
    tr.steps = s;
    tr.colourings.push_back(c0);
    tr.recoloured.push_back({e});
    tr.mono_triangles.push_back(mono_triangles(g, c0));
    check_disjointness(tr.mono_triangles, tr.recoloured, 0);

    int r = c0.colours();
    for (int i = 1; i <= s; ++i) {
        const std::vector<Triangle>& prev = tr.mono_triangles[i - 1];
        const std::vector<Edge>& prev_rec = tr.recoloured[i - 1];
        EdgeColouring ci = tr.colourings[i - 1];
        std::vector<Edge> rec;

        for (const Triangle& t : prev) {
            if (!t.contains(pivot))
                throw RecolouringStructureError("step " + std::to_string(i) +
                                                ": a monochromatic triangle misses the pivot");
            // the edge of t incident to the pivot and outside E_{i-1}
            std::vector<Edge> candidates;
            for (Edge f : t.edges())
                if ((f.u == pivot || f.v == pivot) &&
                    std::find(prev_rec.begin(), prev_rec.end(), f) == prev_rec.end())
                    candidates.push_back(f);
            if (candidates.size() != 1)
                throw RecolouringStructureError("step " + std::to_string(i) +
                                                ": recolour target not unique");
            rec.push_back(candidates[0]);
        }
        std::sort(rec.begin(), rec.end());
        for (std::size_t a = 1; a < rec.size(); ++a)
            if (rec[a] == rec[a - 1])
                throw RecolouringStructureError("step " + std::to_string(i) +
                                                ": two triangles target the same edge");

        for (Edge f : rec) ci.set(f, (ci.get(f) + 1) % r);

        std::vector<Triangle> ti = mono_triangles(g, ci);
        // every surviving monochromatic triangle is new and explained by E_i
        for (const Triangle& t : ti) {
            int through = 0;
            for (Edge f : rec)
                if (t.contains(f)) ++through;
            if (through != 1 || !t.contains(pivot))
                throw RecolouringStructureError(
                    "step " + std::to_string(i) +
                    ": a monochromatic triangle is not explained by the recoloured edges");
        }
        if (!ti.empty()) {
            int col = ci.get(ti[0].edges()[0]);
            for (const Triangle& t : ti)
                if (ci.get(t.edges()[0]) != col)
                    throw RecolouringStructureError("step " + std::to_string(i) +
                                                    ": monochromatic triangles of mixed colours");
        }

        tr.colourings.push_back(std::move(ci));
        tr.recoloured.push_back(std::move(rec));
        tr.mono_triangles.push_back(std::move(ti));
        check_disjointness(tr.mono_triangles, tr.recoloured, i);
    }
    tr.certificate.ok = true;
    return tr;
}

std::vector<EdgeColouring> stage_two_colourings(const StageOneTrace& trace) {
    int s = trace.steps;
    BlownGraph bl = blowup(trace.g, BlowupSpec::uniform(trace.g.vertex_count(), s));
    std::vector<EdgeColouring> out;
    out.push_back(lift_colouring(trace.colourings[0], trace.g, bl.spec));
    const std::vector<int>& pivot_part = bl.part[trace.pivot];

    for (int i = 1; i <= s; ++i) {
        EdgeColouring ci = out.back();
        for (Edge f : trace.recoloured[i]) {
            if (f.u != trace.pivot && f.v != trace.pivot)
                throw RecolouringStructureError("stage two: recoloured edge misses the pivot");
            int other = f.u == trace.pivot ? f.v : f.u;
            int col = trace.colourings[i].get(f);
            // rows v_{i+1}..v_s only; v_1..v_i keep their colour
            for (int row = i; row < s; ++row)
                for (int q : bl.part[other]) ci.set(pivot_part[row], q, col);
        }
        out.push_back(std::move(ci));
    }
    return out;
}

EdgeColouring stage_two(const StageOneTrace& trace) {
    return stage_two_colourings(trace).back();
}

RecolouringReport verify_recolouring(const Graph& g, int s, const EdgeColouring& c) {
    BlownGraph bl = blowup(g, BlowupSpec::uniform(g.vertex_count(), s));
    if (!c.total_on(bl.graph))
        throw PreconditionError("verify_recolouring needs a total colouring of g[s]");
    RecolouringReport rep;
    rep.s = s;
    rep.violations = list_mono_canonical(bl, c, Graph::complete(3), 2);
    return rep;
}

std::vector<ClaimStepReport> verify_claim_per_step(const StageOneTrace& trace) {
    std::vector<EdgeColouring> blown = stage_two_colourings(trace);
    int s = trace.steps;
    std::vector<ClaimStepReport> out;
    Graph k3 = Graph::complete(3);

    for (int i = 1; i <= s; ++i) {
        ClaimStepReport rep;
        rep.step = i;
        for (const Triangle& t : trace.mono_triangles[i - 1]) {
            // restrict to the triangle's three parts and check its blowup
            std::vector<int> verts(t.vertices.begin(), t.vertices.end());
            Graph sub(3, {Edge(0, 1), Edge(0, 2), Edge(1, 2)});
            BlownGraph bl = blowup(sub, BlowupSpec::uniform(3, s));
            BlownGraph host = blowup(trace.g, BlowupSpec::uniform(trace.g.vertex_count(), s));
            EdgeColouring local(bl.graph.vertex_count(), blown[i].colours());
            for (int a = 0; a < 3; ++a)
                for (int b = a + 1; b < 3; ++b)
                    for (int p = 0; p < s; ++p)
                        for (int q = 0; q < s; ++q)
                            local.set(bl.part[a][p], bl.part[b][q],
                                      blown[i].get(host.part[verts[a]][p], host.part[verts[b]][q]));
            for (MonoCanonicalWitness w : list_mono_canonical(bl, local, k3, 2)) {
                // report in host vertex labels
                for (auto& [bv, sel] : w.selection) {
                    for (int& x : sel) x = host.part[verts[bv]][x - bl.part[bv].front()];
                    bv = verts[bv];
                }
                rep.surviving.push_back(std::move(w));
            }
        }
        rep.pass = rep.surviving.empty();
        out.push_back(std::move(rep));
    }
    return out;
}

namespace {

// colours for the cascade: spoke at depth d starts at the colour that flips
// into gamma_d = d % r when its parent triangle is processed
struct TreeBuilder {
    std::vector<Edge> edges;
    std::vector<std::pair<Edge, int>> colour_plan; // edge, c0 colour
    int next_vertex = 2;
    int max_depth = 0;
    int triangles = 0;

    int gamma(int d) const { return d % 2; }

    // spoke (0, x) at depth d gets children triangles {0, x, y}
    void grow(int x, int d, int remaining_depth, int max_branch, Rng* rng) {
        if (remaining_depth == 0) return;
        int branches = 1;
        if (rng && max_branch > 1) branches = 1 + static_cast<int>(rng->below(max_branch));
        for (int b = 0; b < branches; ++b) {
            int y = next_vertex++;
            // the triangle {0,x,y} goes monochromatic in gamma(d) when the
            // parent spoke flips, so both fresh edges start at gamma(d)
            edges.emplace_back(0, y);
            edges.emplace_back(x, y);
            colour_plan.emplace_back(Edge(0, y), gamma(d));
            colour_plan.emplace_back(Edge(x, y), gamma(d));
            ++triangles;
            max_depth = std::max(max_depth, d + 1);
            bool deeper = !rng || remaining_depth > 1;
            if (deeper) grow(y, d + 1, remaining_depth - 1, max_branch, rng);
        }
    }
};

TriangleTreeInstance build_tree(int depth, int max_branch, Rng* rng) {
    TreeBuilder tb;
    // root spoke e = (0,1) at depth 0, colour gamma(0) = red
    tb.edges.emplace_back(0, 1);
    tb.colour_plan.emplace_back(Edge(0, 1), 0);
    tb.grow(1, 0, depth, max_branch, rng);

    TriangleTreeInstance inst;
    inst.g = Graph(tb.next_vertex, tb.edges);
    inst.start_edge = Edge(0, 1);
    inst.pivot = 0;
    inst.depth = tb.max_depth;
    inst.triangles = tb.triangles;
    inst.c0 = EdgeColouring(tb.next_vertex, 2);
    for (auto [e, col] : tb.colour_plan) inst.c0.set(e, col);
    return inst;
}

} // namespace

// colour plan: spoke at depth d+1 starts opposite to gamma(d+1), i.e. at
// gamma(d); the path edge of a depth-(d+1) triangle is gamma(d). The root
// triangles are then monochromatic in colour 0 and each later generation
// becomes monochromatic in alternating colour exactly when its parent spoke
// is recoloured.
TriangleTreeInstance make_triangle_fan(int k) {
    if (k < 1) throw InvalidInputError("fan needs at least one triangle");
    return build_tree(k, 1, nullptr);
}

TriangleTreeInstance make_triangle_tree(std::uint64_t seed, int min_depth, int max_branch) {
    if (min_depth < 1) throw InvalidInputError("triangle tree needs depth at least 1");
    Rng rng(derive_seed(seed, 0x7269));
    return build_tree(min_depth, max_branch, &rng);
}

} // namespace rlab
