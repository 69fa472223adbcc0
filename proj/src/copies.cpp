#include "rlab/copies.hpp"

#include <algorithm>
#include <map>

#include "rlab/errors.hpp"

namespace rlab {

namespace {

// order pattern vertices so each one (after the first of its component) is
// adjacent to an earlier one; keeps the embedding search connected
std::vector<int> search_order(const Graph& pattern) {
    int k = pattern.vertex_count();
    std::vector<int> order;
    std::vector<bool> placed(k, false);
    while (static_cast<int>(order.size()) < k) {
        int pick = -1;
        for (int v = 0; v < k && pick == -1; ++v) {
            if (placed[v]) continue;
            for (int u : order)
                if (pattern.adjacent(u, v)) {
                    pick = v;
                    break;
                }
        }
        if (pick == -1)
            for (int v = 0; v < k; ++v)
                if (!placed[v]) {
                    pick = v;
                    break;
                }
        placed[pick] = true;
        order.push_back(pick);
    }
    return order;
}

} // namespace

std::vector<CopyEmbedding> enumerate_copies(const Graph& pattern, const Graph& host) {
    int k = pattern.vertex_count();
    std::map<std::vector<Edge>, std::vector<int>> found;
    if (k > host.vertex_count()) return {};

    std::vector<int> order = search_order(pattern);
    std::vector<int> image(k, -1);
    std::vector<bool> used(host.vertex_count(), false);

    auto dfs = [&](auto&& self, int depth) -> void {
        if (depth == k) {
            std::vector<Edge> es;
            es.reserve(pattern.edge_count());
            for (Edge e : pattern.edges()) es.emplace_back(image[e.u], image[e.v]);
            std::sort(es.begin(), es.end());
            found.emplace(std::move(es), image);
            return;
        }
        int pv = order[depth];
        for (int hv = 0; hv < host.vertex_count(); ++hv) {
            if (used[hv] || host.degree(hv) < pattern.degree(pv)) continue;
            bool ok = true;
            for (int d = 0; d < depth && ok; ++d)
                if (pattern.adjacent(order[d], pv) && !host.adjacent(image[order[d]], hv)) ok = false;
            if (!ok) continue;
            image[pv] = hv;
            used[hv] = true;
            self(self, depth + 1);
            used[hv] = false;
            image[pv] = -1;
        }
    };
    dfs(dfs, 0);

    std::vector<CopyEmbedding> out;
    out.reserve(found.size());
    for (auto& [es, vm] : found) out.push_back(CopyEmbedding{es, vm});
    return out;
}

bool mono_biclique_exists(const EdgeColouring& c, const std::vector<int>& left,
                          const std::vector<int>& right, int colour, int a, int b,
                          std::vector<int>* left_out, std::vector<int>* right_out) {
    if (a == 0 || b == 0) return true;
    if (static_cast<int>(left.size()) < a || static_cast<int>(right.size()) < b) return false;

    // pick `a` left vertices, keeping the set of right vertices seen in
    // `colour` by all of them; prune when it drops below b
    std::vector<int> chosen;
    auto dfs = [&](auto&& self, std::size_t from, std::vector<int> common) -> bool {
        if (static_cast<int>(chosen.size()) == a) {
            if (left_out) *left_out = chosen;
            if (right_out) *right_out = std::vector<int>(common.begin(), common.begin() + b);
            return true;
        }
        int need = a - static_cast<int>(chosen.size());
        for (std::size_t i = from; i + need <= left.size(); ++i) {
            std::vector<int> next;
            next.reserve(common.size());
            for (int rv : common)
                if (c.get(left[i], rv) == colour) next.push_back(rv);
            if (static_cast<int>(next.size()) < b) continue;
            chosen.push_back(left[i]);
            if (self(self, i + 1, std::move(next))) return true;
            chosen.pop_back();
        }
        return false;
    };
    return dfs(dfs, 0, right);
}

namespace {

// shared walker over (base copy, colour, per-part t-subsets)
template <typename Sink>
void walk_mono_canonical(const BlownGraph& blown, const EdgeColouring& c, const Graph& pattern,
                         int t, Sink&& sink) {
    if (t < 1) throw InvalidInputError("t must be positive");
    if (t > blown.spec.min_multiplicity())
        throw InvalidInputError("t exceeds a blowup multiplicity");
    if (!c.total_on(blown.graph))
        throw PreconditionError("find_mono_canonical needs a total colouring of the blowup");

    std::vector<CopyEmbedding> base_copies = enumerate_copies(pattern, blown.base);

    for (const CopyEmbedding& copy : base_copies) {
        // base vertices used by this copy, ascending
        std::vector<int> verts;
        for (Edge e : copy.edge_set) {
            verts.push_back(e.u);
            verts.push_back(e.v);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        std::vector<int> pos(blown.base.vertex_count(), -1);
        for (std::size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i);

        for (int colour = 0; colour < c.colours(); ++colour) {
            // quick reject: every copy edge's block needs a K_{t,t} in colour
            bool feasible = true;
            for (Edge e : copy.edge_set)
                if (!mono_biclique_exists(c, blown.part[e.u], blown.part[e.v], colour, t, t)) {
                    feasible = false;
                    break;
                }
            if (!feasible) continue;

            // t-subsets per part, lexicographic, consistent across the copy
            std::vector<std::vector<int>> chosen(verts.size());
            bool stop = false;
            auto dfs = [&](auto&& self, std::size_t vi) -> void {
                if (stop) return;
                if (vi == verts.size()) {
                    MonoCanonicalWitness w;
                    w.colour = colour;
                    w.base_copy = copy;
                    for (std::size_t i = 0; i < verts.size(); ++i)
                        w.selection.emplace_back(verts[i], chosen[i]);
                    if (!sink(std::move(w))) stop = true;
                    return;
                }
                int x = verts[vi];
                const std::vector<int>& part = blown.part[x];
                int m = static_cast<int>(part.size());
                std::vector<int> idx(t);
                for (int i = 0; i < t; ++i) idx[i] = i;
                while (true) {
                    std::vector<int> sel(t);
                    for (int i = 0; i < t; ++i) sel[i] = part[idx[i]];
                    bool ok = true;
                    for (std::size_t pj = 0; pj < vi && ok; ++pj) {
                        if (!blown.base.adjacent(verts[pj], x)) continue;
                        bool in_copy = std::binary_search(copy.edge_set.begin(), copy.edge_set.end(),
                                                          Edge(verts[pj], x));
                        if (!in_copy) continue;
                        for (int p : chosen[pj])
                            for (int q : sel)
                                if (c.get(p, q) != colour) {
                                    ok = false;
                                    break;
                                }
                    }
                    if (ok) {
                        chosen[vi] = sel;
                        self(self, vi + 1);
                        if (stop) return;
                    }
                    // next combination
                    int i = t - 1;
                    while (i >= 0 && idx[i] == m - t + i) --i;
                    if (i < 0) break;
                    ++idx[i];
                    for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
                }
            };
            dfs(dfs, 0);
            if (stop) return;
        }
    }
}

} // namespace

std::optional<MonoCanonicalWitness> find_mono_canonical(const BlownGraph& blown,
                                                        const EdgeColouring& c,
                                                        const Graph& pattern, int t) {
    std::optional<MonoCanonicalWitness> out;
    walk_mono_canonical(blown, c, pattern, t, [&](MonoCanonicalWitness w) {
        out = std::move(w);
        return false; // stop at the first
    });
    return out;
}

std::vector<MonoCanonicalWitness> list_mono_canonical(const BlownGraph& blown,
                                                      const EdgeColouring& c,
                                                      const Graph& pattern, int t) {
    std::vector<MonoCanonicalWitness> out;
    walk_mono_canonical(blown, c, pattern, t, [&](MonoCanonicalWitness w) {
        out.push_back(std::move(w));
        return true;
    });
    return out;
}

} // namespace rlab
