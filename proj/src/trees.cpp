#include "rlab/trees.hpp"

#include <algorithm>

#include "rlab/errors.hpp"

namespace rlab {

std::vector<CopyEmbedding> possible_monochromatic_copies(const Graph& tree, const Graph& host,
                                                         const PartialColouring& c, int colour) {
    if (!tree.is_tree()) throw PreconditionError("pattern is not a tree");
    if (colour < 0 || colour >= c.colours()) throw PreconditionError("colour out of range");
    std::vector<CopyEmbedding> out;
    for (CopyEmbedding& copy : enumerate_copies(tree, host)) {
        bool possible = true;
        for (Edge e : copy.edge_set) {
            int col = c.get(e);
            if (col >= 0 && col != colour) {
                possible = false;
                break;
            }
        }
        if (possible) out.push_back(std::move(copy));
    }
    return out;
}

int CoherenceSpec::f(int m) const {
    auto it = f_table.find(m);
    if (it == f_table.end())
        throw InvalidInputError("f table has no entry for multiplicity " + std::to_string(m));
    return it->second;
}

void CoherenceSpec::validate_for(const Graph& base) const {
    spec.validate_for(base);
    if (base_colouring.colours() != 2) throw InvalidInputError("coherence is a 2-colour notion");
    if (!base_colouring.domain_within(base))
        throw InvalidInputError("base colouring colours a non-edge");
    int prev_m = 0, prev_f = 0;
    for (auto [m, fm] : f_table) {
        if (fm < 1 || fm > m)
            throw InvalidInputError("f(" + std::to_string(m) + ") must be within [1, m]");
        if (prev_m && fm < prev_f) throw InvalidInputError("f table is not non-decreasing");
        prev_m = m;
        prev_f = fm;
    }
    for (int x = 0; x < base.vertex_count(); ++x) f(spec.multiplicity[x]); // entries exist
}

std::pair<bool, std::optional<CoherenceViolation>> is_f_coherent(const EdgeColouring& blown,
                                                                 const Graph& base,
                                                                 const CoherenceSpec& cs) {
    cs.validate_for(base);
    BlownGraph bl = blowup(base, cs.spec);
    if (!blown.total_on(bl.graph))
        throw PreconditionError("is_f_coherent needs a total colouring of the blowup");
    if (blown.colours() != 2) throw PreconditionError("is_f_coherent is a 2-colour check");

    for (Edge e : base.edges()) {
        int col = cs.base_colouring.get(e);
        if (col < 0) continue;
        int a = cs.f(cs.spec.multiplicity[e.u]);
        int b = cs.f(cs.spec.multiplicity[e.v]);
        std::vector<int> left, right;
        if (mono_biclique_exists(blown, bl.part[e.u], bl.part[e.v], 1 - col, a, b, &left, &right)) {
            return {false, CoherenceViolation{e, col, left, right}};
        }
    }
    return {true, std::nullopt};
}

namespace {

bool possible_colour(const Graph& host, const PartialColouring& c,
                     const std::vector<std::pair<int, int>>& mapped_edges, int colour) {
    for (auto [u, v] : mapped_edges) {
        if (!host.adjacent(u, v)) return false;
        int col = c.get(u, v);
        if (col >= 0 && col != colour) return false;
    }
    return true;
}

} // namespace

std::optional<std::pair<int, int>> lemma_tree2_witness(const Tree2Instance& inst) {
    const Graph& tree = inst.tree;
    if (!tree.is_tree()) throw InvalidInputError("recombination instance: not a tree");
    int tn = tree.vertex_count();

    std::vector<bool> in_sub(tn, false);
    for (int v : inst.subtree_vertices) {
        if (v < 0 || v >= tn) throw InvalidInputError("recombination instance: subtree vertex out of range");
        in_sub[v] = true;
    }
    // the subtree must induce a subtree and host the attachment's inner end
    {
        Bitset inside(tn);
        std::vector<Edge> sub_edges;
        for (int v : inst.subtree_vertices) inside.set(v);
        for (Edge e : tree.edges())
            if (in_sub[e.u] && in_sub[e.v]) sub_edges.push_back(e);
        if (static_cast<int>(sub_edges.size()) != static_cast<int>(inst.subtree_vertices.size()) - 1 ||
            !tree.connected_without([&] {
                Bitset outside(tn);
                for (int v = 0; v < tn; ++v)
                    if (!in_sub[v]) outside.set(v);
                return outside;
            }()))
            throw InvalidInputError("recombination instance: subtree vertices do not induce a subtree");
    }
    if (!tree.has_edge(inst.attachment)) throw InvalidInputError("recombination instance: attachment not in tree");
    int x_end = -1;
    if (in_sub[inst.attachment.u] && !in_sub[inst.attachment.v]) x_end = inst.attachment.u;
    if (in_sub[inst.attachment.v] && !in_sub[inst.attachment.u]) x_end = inst.attachment.v;
    if (x_end == -1)
        throw InvalidInputError("recombination instance: attachment must leave the subtree from inside");
    if (inst.colouring.colours() != 2) throw InvalidInputError("recombination instance: needs 2 colours");

    int k = static_cast<int>(inst.copy_maps.size());
    auto copy_colours = [&](const std::vector<int>& map_full) {
        std::vector<std::pair<int, int>> all;
        for (Edge e : tree.edges()) all.emplace_back(map_full[e.u], map_full[e.v]);
        std::vector<int> cols;
        for (int col = 0; col < 2; ++col)
            if (possible_colour(inst.host, inst.colouring, all, col)) cols.push_back(col);
        return cols;
    };

    std::vector<std::vector<Edge>> restriction_sets;
    for (int i = 0; i < k; ++i) {
        const std::vector<int>& m = inst.copy_maps[i];
        if (static_cast<int>(m.size()) != tn)
            throw InvalidInputError("recombination instance: copy map has wrong arity");
        std::vector<int> sorted = m;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InvalidInputError("recombination instance: copy map not injective");
        for (Edge e : tree.edges())
            if (!inst.host.adjacent(m[e.u], m[e.v]))
                throw InvalidInputError("recombination instance: copy map misses a host edge");
        if (m[x_end] != inst.z)
            throw InvalidInputError("recombination instance: z does not play the attachment role");
        if (copy_colours(m).empty())
            throw InvalidInputError("recombination instance: a copy is not possible monochromatic");
        std::vector<Edge> restr;
        for (Edge e : tree.edges())
            if (in_sub[e.u] && in_sub[e.v]) restr.emplace_back(m[e.u], m[e.v]);
        std::sort(restr.begin(), restr.end());
        restriction_sets.push_back(std::move(restr));
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (restriction_sets[i] == restriction_sets[j])
                throw InvalidInputError("recombination instance: subtree copies are not distinct");

    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const std::vector<int>& mi = inst.copy_maps[i];
            const std::vector<int>& mj = inst.copy_maps[j];
            // recombined map: subtree from copy i, the rest from copy j
            std::vector<int> rec(tn);
            for (int v = 0; v < tn; ++v) rec[v] = in_sub[v] ? mi[v] : mj[v];
            std::vector<int> sorted = rec;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
            std::vector<std::pair<int, int>> all;
            bool edges_ok = true;
            for (Edge e : tree.edges()) {
                if (!inst.host.adjacent(rec[e.u], rec[e.v])) {
                    edges_ok = false;
                    break;
                }
                all.emplace_back(rec[e.u], rec[e.v]);
            }
            if (!edges_ok) continue;
            // a single colour must make all three possible monochromatic
            for (int col = 0; col < 2; ++col) {
                if (!possible_colour(inst.host, inst.colouring, all, col)) continue;
                std::vector<int> ci = copy_colours(mi), cj = copy_colours(mj);
                bool same_i = std::find(ci.begin(), ci.end(), col) != ci.end();
                bool same_j = std::find(cj.begin(), cj.end(), col) != cj.end();
                if (same_i && same_j) return std::make_pair(i + 1, j + 1); // 1-based
            }
        }
    return std::nullopt;
}

std::vector<TreeTableRow> tree_blowup_ramsey_table(const std::vector<Graph>& grounds,
                                                   const Graph& tree, int r, int t, int n_max,
                                                   const SearchLimits& limits) {
    if (!tree.is_tree()) throw PreconditionError("table target must be a tree");
    std::vector<TreeTableRow> rows;
    for (std::size_t i = 0; i < grounds.size(); ++i) {
        TreeTableRow row;
        row.index = static_cast<int>(i);
        if (tree.edge_count() >= 1 && arrows(grounds[i], tree, r, limits).arrows) {
            row.applicable = true;
            BlowupRamseyQuery q{grounds[i], tree, r, t, n_max, limits};
            row.value = blowup_ramsey_number(q, &row.nodes);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace rlab
