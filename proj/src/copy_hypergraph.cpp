#include "rlab/copy_hypergraph.hpp"

#include <algorithm>
#include <sstream>

#include "rlab/errors.hpp"

namespace rlab {

CopyHypergraph build_copy_hypergraph(const Graph& pattern, const Graph& host) {
    if (pattern.edge_count() < 1)
        throw PreconditionError("copy hypergraph needs a pattern with at least one edge");
    CopyHypergraph hg;
    hg.vertices = host.edges();
    hg.uniformity = pattern.edge_count();
    for (const CopyEmbedding& copy : enumerate_copies(pattern, host)) {
        std::vector<int> he;
        he.reserve(copy.edge_set.size());
        for (Edge e : copy.edge_set) he.push_back(host.edge_index(e));
        std::sort(he.begin(), he.end());
        hg.hyperedges.push_back(std::move(he));
    }
    return hg;
}

namespace {

std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

} // namespace

GirthResult girth_with_witness(const std::vector<std::vector<int>>& hyperedges) {
    int m = static_cast<int>(hyperedges.size());
    std::vector<std::vector<int>> he(hyperedges);
    for (auto& h : he) std::sort(h.begin(), h.end());

    // 2-cycles first
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            std::vector<int> shared = sorted_intersection(he[i], he[j]);
            if (shared.size() >= 2)
                return {Girth::of(2), BergeCycle{{i, j}, shared}};
        }

    // linear now; pairwise intersections have at most one vertex
    std::vector<std::vector<std::pair<int, int>>> link(m); // (other hyperedge, shared vertex)
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            std::vector<int> shared = sorted_intersection(he[i], he[j]);
            if (shared.size() == 1) {
                link[i].emplace_back(j, shared[0]);
                link[j].emplace_back(i, shared[0]);
            }
        }

    // iterative deepening over the cycle length; start edge is the smallest
    // index on its cycle
    std::vector<int> path, links;
    std::vector<bool> used_he(m, false);
    std::vector<bool> used_vx;
    int max_vx = 0;
    for (auto& h : he)
        for (int v : h) max_vx = std::max(max_vx, v + 1);
    used_vx.assign(max_vx, false);

    std::optional<BergeCycle> found;
    auto dfs = [&](auto&& self, int target) -> bool {
        int cur = path.back();
        if (static_cast<int>(path.size()) == target) {
            // close back to the start with a fresh link vertex
            int start = path.front();
            for (auto [nxt, x] : link[cur])
                if (nxt == start && !used_vx[x]) {
                    links.push_back(x);
                    found = BergeCycle{path, links};
                    links.pop_back();
                    return true;
                }
            return false;
        }
        for (auto [nxt, x] : link[cur]) {
            if (used_he[nxt] || nxt < path.front() || used_vx[x]) continue;
            used_he[nxt] = true;
            used_vx[x] = true;
            path.push_back(nxt);
            links.push_back(x);
            if (self(self, target)) return true;
            path.pop_back();
            links.pop_back();
            used_he[nxt] = false;
            used_vx[x] = false;
        }
        return false;
    };

    for (int target = 3; target <= m; ++target) {
        for (int start = 0; start + target <= m; ++start) {
            path = {start};
            links.clear();
            used_he.assign(m, false);
            used_he[start] = true;
            std::fill(used_vx.begin(), used_vx.end(), false);
            if (dfs(dfs, target)) return {Girth::of(target), found};
        }
    }
    return {Girth::infinite(), std::nullopt};
}

Girth girth(const CopyHypergraph& hg) { return girth_with_witness(hg.hyperedges).girth; }

bool is_3_chromatically_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n < 3) return false;
    if (n > 20) throw InvalidInputError("3-chromatic connectivity check is limited to 20 vertices");
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        Bitset inside(n);
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) inside.set(v);
        if (!g.induced_bipartite(inside)) continue;
        if (!g.connected_without(inside)) return false;
    }
    return true;
}

RecolouringPreconditions verify_recolouring_preconditions(const Graph& host, const Graph& pattern,
                                                          int s) {
    RecolouringPreconditions rep;
    GirthResult gr = girth_with_witness(build_copy_hypergraph(pattern, host).hyperedges);
    rep.copy_girth = gr.girth;
    rep.girth_ok = !gr.girth.finite || gr.girth.value > 2 * s + 2;
    if (!rep.girth_ok) rep.short_cycle = gr.witness;
    rep.pattern_min_degree = pattern.min_degree();
    rep.min_degree_ok = rep.pattern_min_degree >= 2;
    if (!rep.min_degree_ok) {
        for (int v = 0; v < pattern.vertex_count(); ++v)
            if (pattern.degree(v) < 2) {
                rep.low_degree_vertex = v;
                break;
            }
    }
    return rep;
}

std::vector<std::vector<int>> parse_hypergraph(const std::string& content) {
    std::vector<std::vector<int>> out;
    std::istringstream in(content);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t at = line.find_first_not_of(" \t\r");
        if (at == std::string::npos || line[at] == '#') continue;
        std::istringstream row(line);
        std::vector<int> he;
        long long v;
        while (row >> v) {
            if (v < 0) throw InvalidInputError("line " + std::to_string(lineno) + ": negative vertex");
            he.push_back(static_cast<int>(v));
        }
        std::sort(he.begin(), he.end());
        if (std::adjacent_find(he.begin(), he.end()) != he.end())
            throw InvalidInputError("line " + std::to_string(lineno) + ": repeated vertex in hyperedge");
        out.push_back(std::move(he));
    }
    return out;
}

std::string hypergraph_to_text(const std::vector<std::vector<int>>& hyperedges) {
    std::ostringstream out;
    for (const auto& he : hyperedges) {
        for (std::size_t i = 0; i < he.size(); ++i) out << (i ? " " : "") << he[i];
        out << '\n';
    }
    return out.str();
}

} // namespace rlab
