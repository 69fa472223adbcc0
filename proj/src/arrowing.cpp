#include "rlab/arrowing.hpp"

#include <algorithm>
#include <numeric>

#include "rlab/blowup.hpp"
#include "rlab/copies.hpp"
#include "rlab/errors.hpp"

namespace rlab {

namespace detail {

AvoidanceSearch::AvoidanceSearch(int num_edges, int colours,
                                 std::vector<std::vector<int>> constraints, std::vector<int> order)
    : colours_(colours), cons_(std::move(constraints)), order_(std::move(order)) {
    edge_cons_.resize(num_edges);
    for (std::size_t ci = 0; ci < cons_.size(); ++ci)
        for (int e : cons_[ci]) edge_cons_[e].push_back(static_cast<int>(ci));
    value_.assign(num_edges, -1);
    count_.assign(cons_.size(), std::vector<int>(colours_, 0));
    unassigned_.resize(cons_.size());
    for (std::size_t ci = 0; ci < cons_.size(); ++ci)
        unassigned_[ci] = static_cast<int>(cons_[ci].size());
}

bool AvoidanceSearch::assign(int edge, int colour, std::vector<int>& forced) {
    value_[edge] = colour;
    trail_.push_back(edge);
    // update every constraint before reporting a conflict; undo_to assumes
    // counters were applied in full for each trail entry
    bool conflict = false;
    for (int ci : edge_cons_[edge]) {
        int cnt = ++count_[ci][colour];
        int left = --unassigned_[ci];
        int size = static_cast<int>(cons_[ci].size());
        if (cnt == size) conflict = true; // monochromatic copy completed
        if (!conflict && colours_ == 2 && cnt == size - 1 && left == 1) {
            for (int f : cons_[ci])
                if (value_[f] == -1) {
                    forced.push_back(f * 2 + (1 - colour));
                    break;
                }
        }
    }
    return !conflict;
}

bool AvoidanceSearch::propagate(std::vector<int>& forced) {
    for (std::size_t h = 0; h < forced.size(); ++h) {
        int e = forced[h] / 2, c = forced[h] % 2;
        if (value_[e] == c) continue;
        if (value_[e] == 1 - c) return false;
        if (!assign(e, c, forced)) return false;
    }
    return true;
}

void AvoidanceSearch::undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
        int e = trail_.back();
        trail_.pop_back();
        int c = value_[e];
        for (int ci : edge_cons_[e]) {
            --count_[ci][c];
            ++unassigned_[ci];
        }
        value_[e] = -1;
    }
}

bool AvoidanceSearch::dfs(std::size_t depth) {
    if (nodes_++ >= budget_) {
        out_of_budget_ = true;
        return false;
    }
    while (depth < order_.size() && value_[order_[depth]] != -1) ++depth;
    if (depth == order_.size()) return true;
    int edge = order_[depth];

    // canonical colour introduction: colour c only after c-1 appears
    int limit;
    if (colours_ == 2) {
        limit = trail_.empty() ? 1 : 2;
    } else {
        int max_used = -1;
        for (int e : trail_) max_used = std::max(max_used, value_[e]);
        limit = std::min(colours_, max_used + 2);
    }

    // try the less pressured colour first; deterministic in the state
    int trial[8];
    for (int c = 0; c < limit; ++c) trial[c] = c;
    if (limit == 2) {
        long long score[2] = {0, 0};
        for (int c = 0; c < 2; ++c)
            for (int ci : edge_cons_[edge]) {
                long long cnt = count_[ci][c];
                score[c] += cnt * cnt;
                if (cnt == static_cast<long long>(cons_[ci].size()) - 1) score[c] += 1'000'000;
            }
        if (score[1] < score[0]) std::swap(trial[0], trial[1]);
    }

    for (int ti = 0; ti < limit; ++ti) {
        int c = trial[ti];
        std::size_t mark = trail_.size();
        std::vector<int> forced{edge * 2 + c};
        bool ok;
        if (colours_ == 2) {
            ok = propagate(forced);
        } else {
            std::vector<int> none;
            ok = assign(edge, c, none);
        }
        if (ok && dfs(depth + 1)) return true;
        undo_to(mark);
        if (out_of_budget_) return false;
    }
    return false;
}

std::optional<std::vector<int>> AvoidanceSearch::find_avoiding(std::uint64_t budget) {
    budget_ = budget;
    // a constraint may already be impossible to satisfy only if empty
    for (const auto& con : cons_)
        if (con.empty()) return std::nullopt;
    if (dfs(0)) return value_;
    if (out_of_budget_) throw InconclusiveError(nodes_);
    return std::nullopt;
}

} // namespace detail

namespace {

std::vector<int> arrows_edge_order(const Graph& g, const std::vector<std::vector<int>>& cons) {
    std::vector<int> through(g.edge_count(), 0);
    for (const auto& con : cons)
        for (int e : con) ++through[e];
    std::vector<int> order(g.edge_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return through[a] > through[b]; });
    return order;
}

bool has_mono_copy(const Graph& g, const EdgeColouring& c,
                   const std::vector<std::vector<int>>& cons) {
    for (const auto& con : cons) {
        int col = c.get(g.edges()[con[0]]);
        bool mono = col >= 0;
        for (std::size_t i = 1; mono && i < con.size(); ++i)
            if (c.get(g.edges()[con[i]]) != col) mono = false;
        if (mono) return true;
    }
    return false;
}

} // namespace

ArrowingResult arrows(const Graph& g, const Graph& pattern, int r, const SearchLimits& limits) {
    if (r < 1) throw PreconditionError("colour count must be at least 1");
    if (pattern.edge_count() < 1) throw PreconditionError("arrowing needs a pattern with an edge");

    std::vector<std::vector<int>> cons;
    for (const CopyEmbedding& copy : enumerate_copies(pattern, g)) {
        std::vector<int> con;
        con.reserve(copy.edge_set.size());
        for (Edge e : copy.edge_set) con.push_back(g.edge_index(e));
        cons.push_back(std::move(con));
    }
    if (cons.empty()) {
        // no copies at all: the empty colouring avoids everything
        ArrowingResult res;
        res.arrows = false;
        res.witness = EdgeColouring(g.vertex_count(), r);
        for (Edge e : g.edges()) res.witness->set(e, 0);
        return res;
    }

    detail::AvoidanceSearch search(g.edge_count(), r, cons, arrows_edge_order(g, cons));
    std::optional<std::vector<int>> avoid = search.find_avoiding(limits.node_budget);
    ArrowingResult res;
    res.nodes_explored = search.nodes();
    res.arrows = !avoid.has_value();
    if (avoid) {
        EdgeColouring w(g.vertex_count(), r);
        for (int i = 0; i < g.edge_count(); ++i) w.set(g.edges()[i], (*avoid)[i]);
        if (has_mono_copy(g, w, cons))
            throw std::logic_error("internal: avoiding witness re-check failed");
        res.witness = std::move(w);
    }
    return res;
}

bool is_ramsey_minimal(const Graph& g, const Graph& pattern, int r, const SearchLimits& limits) {
    if (!arrows(g, pattern, r, limits).arrows) return false;
    for (Edge e : g.edges())
        if (arrows(g.without_edge(e), pattern, r, limits).arrows) return false;
    return true;
}

std::optional<EdgeColouring> blowup_avoiding_colouring(const Graph& g, const Graph& pattern, int r,
                                                       int t, int n, const SearchLimits& limits,
                                                       std::uint64_t* nodes_out) {
    if (t < 1 || r < 1 || n < 1)
        throw PreconditionError("blowup avoidance needs r, t, n >= 1");
    BlownGraph bl = blowup(g, BlowupSpec::uniform(g.vertex_count(), n));
    if (t > n) {
        // no canonical copies yet; any colouring avoids
        EdgeColouring c(bl.graph.vertex_count(), r);
        for (Edge e : bl.graph.edges()) c.set(e, 0);
        if (nodes_out) *nodes_out = 0;
        return c;
    }

    // t-subsets of an n-part
    std::vector<std::vector<int>> subsets;
    std::vector<int> idx(t);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        subsets.push_back(idx);
        int i = t - 1;
        while (i >= 0 && idx[i] == n - t + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }

    std::vector<std::vector<int>> cons;
    for (const CopyEmbedding& copy : enumerate_copies(pattern, g)) {
        std::vector<int> verts;
        for (Edge e : copy.edge_set) {
            verts.push_back(e.u);
            verts.push_back(e.v);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        std::vector<int> pos(g.vertex_count(), -1);
        for (std::size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i);

        std::vector<int> pick(verts.size(), 0);
        while (true) {
            std::vector<int> con;
            for (Edge e : copy.edge_set)
                for (int a : subsets[pick[pos[e.u]]])
                    for (int b : subsets[pick[pos[e.v]]])
                        con.push_back(bl.graph.edge_index(Edge(bl.part[e.u][a], bl.part[e.v][b])));
            cons.push_back(std::move(con));
            int i = static_cast<int>(verts.size()) - 1;
            while (i >= 0 && pick[i] + 1 == static_cast<int>(subsets.size())) --i;
            if (i < 0) break;
            ++pick[i];
            for (std::size_t j = i + 1; j < verts.size(); ++j) pick[j] = 0;
        }
    }

    // edge order: bring one blown vertex per part in at a time and add its
    // edges colex, so whole canonical copies close as early as possible
    std::vector<int> position(bl.graph.vertex_count());
    for (int v = 0; v < bl.graph.vertex_count(); ++v)
        position[v] = (bl.origin[v].second - 1) * g.vertex_count() + bl.origin[v].first;
    std::vector<int> order(bl.graph.edge_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        Edge ea = bl.graph.edges()[a], eb = bl.graph.edges()[b];
        auto key = [&](Edge e) {
            int p = position[e.u], q = position[e.v];
            return std::pair(std::max(p, q), std::min(p, q));
        };
        return key(ea) < key(eb);
    });

    detail::AvoidanceSearch search(bl.graph.edge_count(), r, std::move(cons), std::move(order));
    std::optional<std::vector<int>> avoid = search.find_avoiding(limits.node_budget);
    if (nodes_out) *nodes_out = search.nodes();
    if (!avoid) return std::nullopt;
    EdgeColouring w(bl.graph.vertex_count(), r);
    for (int i = 0; i < bl.graph.edge_count(); ++i) w.set(bl.graph.edges()[i], (*avoid)[i]);
    return w;
}

std::optional<int> blowup_ramsey_number(const BlowupRamseyQuery& q, std::uint64_t* nodes_out) {
    if (q.t < 1 || q.colours < 1 || q.n_max < 1)
        throw PreconditionError("blowup Ramsey query needs r, t, n_max >= 1");
    if (!arrows(q.g, q.pattern, q.colours, q.limits).arrows)
        throw PreconditionError("ground graph does not arrow the pattern");

    std::uint64_t nodes_total = 0;
    for (int n = 1; n <= q.n_max; ++n) {
        if (q.t > n) continue;
        if (nodes_total >= q.limits.node_budget) throw InconclusiveError(nodes_total);
        std::uint64_t nodes = 0;
        std::optional<EdgeColouring> avoid;
        try {
            avoid = blowup_avoiding_colouring(q.g, q.pattern, q.colours, q.t, n,
                                              SearchLimits{q.limits.node_budget - nodes_total},
                                              &nodes);
        } catch (const InconclusiveError& e) {
            throw InconclusiveError(nodes_total + e.nodes_explored);
        }
        nodes_total += nodes;
        if (!avoid) {
            if (nodes_out) *nodes_out = nodes_total;
            return n;
        }
    }
    if (nodes_out) *nodes_out = nodes_total;
    return std::nullopt;
}

} // namespace rlab
