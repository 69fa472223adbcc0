#include "rlab/unavoidable.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "rlab/bitset.hpp"
#include "rlab/errors.hpp"
#include "rlab/parallel.hpp"
#include "rlab/rng.hpp"

namespace rlab {

ColouredClique::ColouredClique(int k, int r)
    : k_(k), r_(r), vcol_(k, 0), ecol_(static_cast<std::size_t>(k) * k, -1) {
    if (k < 0 || r < 1 || r > 31) throw InvalidInputError("coloured clique: bad order or colours");
}

void ColouredClique::set_vertex_colour(int v, int c) {
    if (v < 0 || v >= k_ || c < 0 || c >= r_) throw InvalidInputError("bad vertex colour");
    vcol_[v] = static_cast<std::int8_t>(c);
}

void ColouredClique::set_edge_colour(int u, int v, int c) {
    if (u == v || u < 0 || v < 0 || u >= k_ || v >= k_ || c < 0 || c >= r_)
        throw InvalidInputError("bad edge colour");
    ecol_[static_cast<std::size_t>(u) * k_ + v] = static_cast<std::int8_t>(c);
    ecol_[static_cast<std::size_t>(v) * k_ + u] = static_cast<std::int8_t>(c);
}

bool ColouredClique::edge_colours_total() const {
    for (int u = 0; u < k_; ++u)
        for (int v = u + 1; v < k_; ++v)
            if (edge_colour(u, v) < 0) return false;
    return true;
}

std::uint32_t ColouredClique::colour_span(const std::vector<int>& subset) const {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < subset.size(); ++i) {
        mask |= 1u << vcol_[subset[i]];
        for (std::size_t j = i + 1; j < subset.size(); ++j)
            mask |= 1u << edge_colour(subset[i], subset[j]);
    }
    return mask;
}

std::uint32_t ColouredClique::colour_span() const {
    std::vector<int> all(k_);
    std::iota(all.begin(), all.end(), 0);
    return colour_span(all);
}

std::vector<std::uint8_t> ColouredClique::canonical_form(bool edge_colours_only) const {
    std::vector<int> perm(k_);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint8_t> best;
    do {
        std::vector<std::uint8_t> enc;
        enc.reserve(k_ + k_ * k_ / 2);
        if (!edge_colours_only)
            for (int v = 0; v < k_; ++v) enc.push_back(static_cast<std::uint8_t>(vcol_[perm[v]]));
        for (int u = 0; u < k_; ++u)
            for (int v = u + 1; v < k_; ++v)
                enc.push_back(static_cast<std::uint8_t>(edge_colour(perm[u], perm[v]) + 1));
        if (best.empty() || enc < best) best = std::move(enc);
    } while (std::next_permutation(perm.begin(), perm.end()));
    best.insert(best.begin(), static_cast<std::uint8_t>(k_));
    return best;
}

std::optional<std::vector<int>> coloured_clique_isomorphism(const ColouredClique& a,
                                                            const ColouredClique& b,
                                                            bool edge_colours_only) {
    if (a.order() != b.order() || a.colours() != b.colours()) return std::nullopt;
    int k = a.order();
    std::vector<int> image(k, -1);
    std::vector<bool> used(k, false);
    auto dfs = [&](auto&& self, int v) -> bool {
        if (v == k) return true;
        for (int w = 0; w < k; ++w) {
            if (used[w]) continue;
            if (!edge_colours_only && a.vertex_colour(v) != b.vertex_colour(w)) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (a.edge_colour(u, v) != b.edge_colour(image[u], w)) ok = false;
            if (!ok) continue;
            image[v] = w;
            used[w] = true;
            if (self(self, v + 1)) return true;
            used[w] = false;
            image[v] = -1;
        }
        return false;
    };
    if (dfs(dfs, 0)) return image;
    return std::nullopt;
}

bool is_r_minimal(const ColouredClique& p, int r) {
    if (p.order() < 1 || !p.edge_colours_total()) return false;
    std::uint32_t full = (r >= 32) ? ~0u : ((1u << r) - 1);
    if ((p.colour_span() & full) != full) return false;
    // single deletions suffice: spans shrink monotonically under subsets
    std::vector<int> rest;
    for (int skip = 0; skip < p.order(); ++skip) {
        rest.clear();
        for (int v = 0; v < p.order(); ++v)
            if (v != skip) rest.push_back(v);
        if ((p.colour_span(rest) & full) == full) return false;
    }
    return true;
}

namespace {

// all coloured cliques on k vertices spanning fewer than r colours, up to
// colour-preserving isomorphism; grown by extension from k-1
std::vector<ColouredClique> partial_span_cliques(int k, int r, std::uint32_t full) {
    std::vector<ColouredClique> out;
    std::set<std::vector<std::uint8_t>> seen;
    if (k == 1) {
        for (int c = 0; c < r; ++c) {
            ColouredClique q(1, r);
            q.set_vertex_colour(0, c);
            if ((q.colour_span() & full) != full) out.push_back(q);
        }
        return out;
    }
    std::vector<ColouredClique> smaller = partial_span_cliques(k - 1, r, full);
    long long ext = 1;
    for (int i = 0; i < k - 1; ++i) ext *= r;
    for (const ColouredClique& q : smaller) {
        for (int nc = 0; nc < r; ++nc)
            for (long long code = 0; code < ext; ++code) {
                ColouredClique p(k, r);
                for (int v = 0; v < k - 1; ++v) {
                    p.set_vertex_colour(v, q.vertex_colour(v));
                    for (int u = 0; u < v; ++u) p.set_edge_colour(u, v, q.edge_colour(u, v));
                }
                p.set_vertex_colour(k - 1, nc);
                long long rem = code;
                for (int u = 0; u < k - 1; ++u) {
                    p.set_edge_colour(u, k - 1, static_cast<int>(rem % r));
                    rem /= r;
                }
                if ((p.colour_span() & full) == full) continue;
                auto canon = p.canonical_form(false);
                if (seen.insert(std::move(canon)).second) out.push_back(std::move(p));
            }
    }
    return out;
}

} // namespace

std::vector<ColouredClique> enumerate_r_minimal(int r) {
    if (r < 1) throw PreconditionError("need at least one colour");
    std::uint32_t full = (1u << r) - 1;
    std::map<std::vector<std::uint8_t>, ColouredClique> minimal;

    if (r == 1) {
        ColouredClique p(1, 1);
        minimal.emplace(p.canonical_form(false), p);
    }

    for (int k = 2; k <= 2 * r; ++k) {
        // candidates: a (k-1)-clique of partial span plus one vertex
        std::vector<ColouredClique> bases = partial_span_cliques(k - 1, r, full);
        long long ext = 1;
        for (int i = 0; i < k - 1; ++i) ext *= r;
        for (const ColouredClique& q : bases) {
            std::vector<std::uint32_t> span_minus(k - 1, 0);
            std::vector<int> rest;
            for (int skip = 0; skip < k - 1; ++skip) {
                rest.clear();
                for (int v = 0; v < k - 1; ++v)
                    if (v != skip) rest.push_back(v);
                span_minus[skip] = q.colour_span(rest);
            }
            std::uint32_t base_span = q.colour_span();

            for (int nc = 0; nc < r; ++nc)
                for (long long code = 0; code < ext; ++code) {
                    int ecols[16];
                    std::uint32_t newbits = 1u << nc;
                    int cnt[32] = {0};
                    long long rem = code;
                    for (int u = 0; u < k - 1; ++u) {
                        ecols[u] = static_cast<int>(rem % r);
                        rem /= r;
                        newbits |= 1u << ecols[u];
                        ++cnt[ecols[u]];
                    }
                    if (((base_span | newbits) & full) != full) continue; // must span everything
                    bool minimal_ok = true; // dropping the new vertex loses a colour already
                    for (int skip = 0; skip < k - 1 && minimal_ok; ++skip) {
                        std::uint32_t bits = (1u << nc);
                        for (int u = 0; u < k - 1; ++u)
                            if (u != skip) bits |= 1u << ecols[u];
                        if (((span_minus[skip] | bits) & full) == full) minimal_ok = false;
                    }
                    if (!minimal_ok) continue;
                    ColouredClique p(k, r);
                    for (int v = 0; v < k - 1; ++v) {
                        p.set_vertex_colour(v, q.vertex_colour(v));
                        for (int u = 0; u < v; ++u) p.set_edge_colour(u, v, q.edge_colour(u, v));
                    }
                    p.set_vertex_colour(k - 1, nc);
                    for (int u = 0; u < k - 1; ++u) p.set_edge_colour(u, k - 1, ecols[u]);
                    auto canon = p.canonical_form(false);
                    minimal.emplace(std::move(canon), std::move(p));
                }
        }
    }
    std::vector<ColouredClique> out;
    out.reserve(minimal.size());
    for (auto& [canon, p] : minimal) out.push_back(std::move(p));
    return out;
}

ColouredClique coloured_blowup(const ColouredClique& p, int t) {
    if (t < 1) throw PreconditionError("blowup size must be positive");
    int k = p.order();
    ColouredClique out(k * t, p.colours());
    auto id = [t](int base, int idx) { return base * t + idx; };
    for (int v = 0; v < k; ++v)
        for (int i = 0; i < t; ++i) out.set_vertex_colour(id(v, i), p.vertex_colour(v));
    for (int v = 0; v < k; ++v)
        for (int i = 0; i < t; ++i)
            for (int j = i + 1; j < t; ++j) out.set_edge_colour(id(v, i), id(v, j), p.vertex_colour(v));
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
            for (int i = 0; i < t; ++i)
                for (int j = 0; j < t; ++j)
                    out.set_edge_colour(id(u, i), id(v, j), p.edge_colour(u, v));
    return out;
}

UnavoidableFamily unavoidable_family(int r, int t) {
    if (t < 2) throw PreconditionError("unavoidable patterns are defined for t >= 2");
    UnavoidableFamily fam;
    fam.r = r;
    fam.t = t;
    for (const ColouredClique& p : enumerate_r_minimal(r)) {
        ColouredClique blown = coloured_blowup(p, t);
        bool dup = false;
        for (const ColouredClique& m : fam.members)
            if (coloured_clique_isomorphism(m, blown, true)) {
                dup = true;
                break;
            }
        if (!dup) fam.members.push_back(std::move(blown));
    }
    return fam;
}

namespace {

void require_total_complete(const EdgeColouring& host) {
    long long n = host.host_vertices();
    if (static_cast<long long>(host.assigned_count()) != n * (n - 1) / 2)
        throw PreconditionError("host colouring must be total on a complete graph");
}

} // namespace

std::optional<Detection> detect_unavoidable(const EdgeColouring& host,
                                            const UnavoidableFamily& family) {
    require_total_complete(host);
    int n = host.host_vertices();
    int r = host.colours();

    std::vector<std::vector<int>> host_cdeg(n, std::vector<int>(r, 0));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) ++host_cdeg[u][host.get(u, v)];

    for (std::size_t mi = 0; mi < family.members.size(); ++mi) {
        const ColouredClique& m = family.members[mi];
        int p = m.order();
        if (p > n || m.colours() > r) continue;
        std::vector<std::vector<int>> pat_cdeg(p, std::vector<int>(m.colours(), 0));
        for (int u = 0; u < p; ++u)
            for (int v = 0; v < p; ++v)
                if (u != v) ++pat_cdeg[u][m.edge_colour(u, v)];

        std::vector<std::vector<bool>> viable(p, std::vector<bool>(n, true));
        for (int a = 0; a < p; ++a)
            for (int h = 0; h < n; ++h)
                for (int c = 0; c < m.colours(); ++c)
                    if (host_cdeg[h][c] < pat_cdeg[a][c]) {
                        viable[a][h] = false;
                        break;
                    }

        std::vector<int> image(p, -1);
        std::vector<bool> used(n, false);
        auto dfs = [&](auto&& self, int a) -> bool {
            if (a == p) return true;
            for (int h = 0; h < n; ++h) {
                if (used[h] || !viable[a][h]) continue;
                bool ok = true;
                for (int b = 0; b < a && ok; ++b)
                    if (host.get(image[b], h) != m.edge_colour(b, a)) ok = false;
                if (!ok) continue;
                image[a] = h;
                used[h] = true;
                if (self(self, a + 1)) return true;
                used[h] = false;
                image[a] = -1;
            }
            return false;
        };
        if (dfs(dfs, 0))
            return Detection{static_cast<int>(mi), m, image};
    }
    return std::nullopt;
}

std::optional<Detection> detect_unavoidable(const EdgeColouring& host, int r, int t) {
    return detect_unavoidable(host, unavoidable_family(r, t));
}

namespace {

std::vector<std::vector<int>> t_subsets(const std::vector<int>& pool, int t) {
    std::vector<std::vector<int>> out;
    if (t > static_cast<int>(pool.size())) return out;
    std::vector<int> idx(t);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        std::vector<int> sub(t);
        for (int i = 0; i < t; ++i) sub[i] = pool[idx[i]];
        out.push_back(std::move(sub));
        int i = t - 1;
        while (i >= 0 && idx[i] == static_cast<int>(pool.size()) - t + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

long long choose_ll(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long c = 1;
    for (int i = 1; i <= k; ++i) c = c * (n - i + 1) / i;
    return c;
}

// adjacency accessor over either a plain graph or one colour class
using NeighbourFn = const Bitset& (*)(const void*, int);

struct AdjacencyView {
    int n = 0;
    const void* ctx = nullptr;
    NeighbourFn fn = nullptr;
    const Bitset& neighbours(int v) const { return fn(ctx, v); }
};

AdjacencyView graph_view(const Graph& g) {
    return {g.vertex_count(), &g,
            [](const void* ctx, int v) -> const Bitset& {
                return static_cast<const Graph*>(ctx)->neighbours(v);
            }};
}

// dependent random choice core shared by the public operation and the
// pipeline; allowed restricts the playing field, carve is |C(X)|
std::optional<RichSet> drc_core(const AdjacencyView& g, int set_size, int t, int carve,
                                const Bitset& allowed, std::uint64_t seed, int trial_budget) {
    if (set_size < t || t < 1) throw PreconditionError("dependent random choice needs K >= t >= 1");
    int n = g.n;
    long long required = static_cast<long long>(carve) * choose_ll(set_size, t) + set_size;

    std::vector<int> pool_all = allowed.to_vector();
    if (static_cast<int>(pool_all.size()) < set_size + carve) return std::nullopt;

    for (int trial = 0; trial < trial_budget; ++trial) {
        Rng rng(derive_seed(seed, 0xd7c, trial));
        // sample t distinct vertices
        std::vector<int> sample = pool_all;
        rng.shuffle(sample);
        sample.resize(t);

        Bitset u_set = allowed;
        for (int v : sample) u_set &= g.neighbours(v);
        std::vector<int> u = u_set.to_vector();
        if (static_cast<int>(u.size()) < set_size) continue;

        auto common_count = [&](const std::vector<int>& xs) {
            Bitset c = allowed;
            for (int x : xs) c &= g.neighbours(x);
            return c;
        };

        // prune members of too many poor t-subsets
        while (static_cast<int>(u.size()) >= set_size) {
            std::vector<int> poor_of(u.size(), 0);
            bool any_poor = false;
            for (const std::vector<int>& xs : t_subsets(u, t)) {
                Bitset c = common_count(xs);
                if (c.count() < required) {
                    any_poor = true;
                    for (int x : xs) {
                        auto it = std::lower_bound(u.begin(), u.end(), x);
                        ++poor_of[it - u.begin()];
                    }
                }
            }
            if (!any_poor) break;
            int worst = static_cast<int>(std::max_element(poor_of.begin(), poor_of.end()) -
                                         poor_of.begin());
            u.erase(u.begin() + worst);
        }
        if (static_cast<int>(u.size()) < set_size) continue;

        RichSet rich;
        rich.s.assign(u.begin(), u.begin() + set_size);
        Bitset taken(n);
        for (int v : rich.s) taken.set(v);
        bool carved = true;
        for (const std::vector<int>& xs : t_subsets(rich.s, t)) {
            Bitset c = allowed;
            for (int x : xs) c &= g.neighbours(x);
            c -= taken;
            std::vector<int> pick;
            for (int v = c.first_set_at_least(0); v != -1 && static_cast<int>(pick.size()) < carve;
                 v = c.first_set_at_least(v + 1))
                pick.push_back(v);
            if (static_cast<int>(pick.size()) < carve) {
                carved = false;
                break;
            }
            for (int v : pick) taken.set(v);
            rich.neighbourhoods.emplace_back(xs, std::move(pick));
        }
        if (carved) return rich;
    }
    return std::nullopt;
}

bool rich_set_valid_view(const AdjacencyView& g, const RichSet& rich, int set_size, int t,
                         int carve) {
    if (static_cast<int>(rich.s.size()) != set_size) return false;
    std::vector<int> s = rich.s;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;

    std::vector<std::vector<int>> expected = t_subsets(rich.s, t);
    if (expected.size() != rich.neighbourhoods.size()) return false;
    std::set<int> seen(rich.s.begin(), rich.s.end());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        const auto& [xs, cx] = rich.neighbourhoods[i];
        if (xs != expected[i]) return false;
        if (static_cast<int>(cx.size()) < carve) return false;
        for (int v : cx) {
            if (!seen.insert(v).second) return false; // overlaps S or another C(X)
            for (int x : xs)
                if (!g.neighbours(x).test(v)) return false;
        }
    }
    return true;
}

} // namespace

std::optional<RichSet> drc_rich_set(const Graph& g, int set_size, int t, std::uint64_t seed,
                                    int trial_budget) {
    Bitset allowed(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) allowed.set(v);
    std::optional<RichSet> rich =
        drc_core(graph_view(g), set_size, t, set_size, allowed, seed, trial_budget);
    if (rich && !rich_set_valid(g, *rich, set_size, t))
        throw std::logic_error("internal: rich set failed its own verification");
    return rich;
}

bool rich_set_valid(const Graph& g, const RichSet& rich, int set_size, int t) {
    return rich_set_valid_view(graph_view(g), rich, set_size, t, set_size);
}

CliquePairColouring CliquePairColouring::blank(int n1, int n2, int r) {
    CliquePairColouring x;
    x.r = r;
    x.n1 = n1;
    x.n2 = n2;
    x.first.assign(static_cast<std::size_t>(n1) * n1, -1);
    x.second.assign(static_cast<std::size_t>(n2) * n2, -1);
    x.cross.assign(static_cast<std::size_t>(n1) * n2, -1);
    return x;
}

void CliquePairColouring::set_first(int a, int b, int c) {
    first[static_cast<std::size_t>(a) * n1 + b] = static_cast<std::int8_t>(c);
    first[static_cast<std::size_t>(b) * n1 + a] = static_cast<std::int8_t>(c);
}
void CliquePairColouring::set_second(int a, int b, int c) {
    second[static_cast<std::size_t>(a) * n2 + b] = static_cast<std::int8_t>(c);
    second[static_cast<std::size_t>(b) * n2 + a] = static_cast<std::int8_t>(c);
}
void CliquePairColouring::set_cross(int a, int b, int c) {
    cross[static_cast<std::size_t>(a) * n2 + b] = static_cast<std::int8_t>(c);
}

namespace {

// exact search without the s <= t restriction; lexicographically first
std::optional<BiRamseyWitness> bi_ramsey_core(const CliquePairColouring& x, int s, int t) {
    if (s < 0 || t < 0 || s > x.n1 || t > x.n2) return std::nullopt;

    std::vector<int> a, b;
    std::optional<BiRamseyWitness> found;

    auto choose_b = [&](auto&& self, int from, int col_b, int col_cross) -> bool {
        if (static_cast<int>(b.size()) == t) {
            found = BiRamseyWitness{a, b, -1, col_b, col_cross};
            return true;
        }
        for (int v = from; v + (t - static_cast<int>(b.size())) <= x.n2; ++v) {
            int cb = col_b, cc = col_cross;
            bool ok = true;
            for (int w : b) {
                int c = x.second_colour(w, v);
                if (cb == -1) cb = c;
                if (c != cb) {
                    ok = false;
                    break;
                }
            }
            for (std::size_t i = 0; ok && i < a.size(); ++i) {
                int c = x.cross_colour(a[i], v);
                if (cc == -1) cc = c;
                if (c != cc) ok = false;
            }
            if (!ok) continue;
            b.push_back(v);
            if (self(self, v + 1, cb, cc)) return true;
            b.pop_back();
        }
        return false;
    };

    auto choose_a = [&](auto&& self, int from, int col_a) -> bool {
        if (static_cast<int>(a.size()) == s) {
            if (choose_b(choose_b, 0, -1, -1)) {
                found->colour_a = col_a;
                return true;
            }
            return false;
        }
        for (int v = from; v + (s - static_cast<int>(a.size())) <= x.n1; ++v) {
            int ca = col_a;
            bool ok = true;
            for (int w : a) {
                int c = x.first_colour(w, v);
                if (ca == -1) ca = c;
                if (c != ca) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            a.push_back(v);
            if (self(self, v + 1, ca)) return true;
            a.pop_back();
        }
        return false;
    };

    choose_a(choose_a, 0, -1);
    return found;
}

} // namespace

std::optional<BiRamseyWitness> bi_ramsey_refine(const CliquePairColouring& x, int s, int t) {
    if (s > t) throw PreconditionError("bi-Ramsey refinement expects s <= t");
    return bi_ramsey_core(x, s, t);
}

namespace {

bool clique_mono(const EdgeColouring& host, const std::vector<int>& set, int* colour_out = nullptr) {
    int col = -1;
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            int c = host.get(set[i], set[j]);
            if (col == -1) col = c;
            if (c != col) return false;
        }
    if (colour_out) *colour_out = col;
    return true;
}

bool bipartite_mono(const EdgeColouring& host, const std::vector<int>& a,
                    const std::vector<int>& b, int* colour_out = nullptr) {
    int col = -1;
    for (int u : a)
        for (int v : b) {
            int c = host.get(u, v);
            if (col == -1) col = c;
            if (c != col) return false;
        }
    if (colour_out) *colour_out = col;
    return true;
}

CliquePairColouring subpair(const EdgeColouring& host, const std::vector<int>& a,
                            const std::vector<int>& b) {
    CliquePairColouring x = CliquePairColouring::blank(static_cast<int>(a.size()),
                                                       static_cast<int>(b.size()), host.colours());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            x.set_first(static_cast<int>(i), static_cast<int>(j), host.get(a[i], a[j]));
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j)
            x.set_second(static_cast<int>(i), static_cast<int>(j), host.get(b[i], b[j]));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            x.set_cross(static_cast<int>(i), static_cast<int>(j), host.get(a[i], b[j]));
    return x;
}

// shrinks the pair until both cliques and the bridge between them are
// monochromatic, keeping the sets as large as the colouring allows
bool refine_pair(const EdgeColouring& host, std::vector<int>& a, std::vector<int>& b, int min_a,
                 int min_b, std::vector<std::string>& log, const std::string& label) {
    if (clique_mono(host, a) && clique_mono(host, b) && bipartite_mono(host, a, b)) return true;
    int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
    std::vector<std::pair<int, int>> ladder;
    for (int ta = na; ta >= min_a; --ta)
        for (int tb = nb; tb >= min_b; --tb)
            if (ta != na || tb != nb) ladder.emplace_back(ta, tb);
    std::sort(ladder.begin(), ladder.end(), [](auto l, auto r) {
        return std::pair(l.first + l.second, l.first) > std::pair(r.first + r.second, r.first);
    });
    CliquePairColouring x = subpair(host, a, b);
    for (auto [ta, tb] : ladder) {
        if (std::optional<BiRamseyWitness> w = bi_ramsey_core(x, ta, tb)) {
            std::vector<int> a2, b2;
            for (int i : w->a) a2.push_back(a[i]);
            for (int i : w->b) b2.push_back(b[i]);
            log.push_back(label + ": " + std::to_string(na) + "x" + std::to_string(nb) + " -> " +
                          std::to_string(ta) + "x" + std::to_string(tb));
            a = std::move(a2);
            b = std::move(b2);
            return true;
        }
    }
    log.push_back(label + ": no monochromatic refinement down to " + std::to_string(min_a) + "x" +
                  std::to_string(min_b));
    return false;
}

} // namespace

PipelineResult constructive_find(const EdgeColouring& host, int r, int t, std::uint64_t seed,
                                 const PipelineParams& params) {
    PipelineResult res;
    if (t < 2) throw PreconditionError("constructive search is defined for t >= 2");
    require_total_complete(host);
    if (host.colours() < r) throw PreconditionError("host colouring has fewer colours than r");
    int n = host.host_vertices();

    std::vector<int> m_sizes = params.set_sizes;
    if (m_sizes.empty())
        for (int i = 1; i <= r; ++i) m_sizes.push_back(4 * t * (r - i + 1));
    if (static_cast<int>(m_sizes.size()) != r)
        throw PreconditionError("pipeline needs one set size per colour");
    int ell = params.neighbourhood_size > 0 ? params.neighbourhood_size : 4 * t;
    for (int m : m_sizes)
        if (m < t) throw PreconditionError("pipeline set sizes must be at least t");
    if (ell < t) throw PreconditionError("pipeline neighbourhood size must be at least t");

    // per-colour adjacency bitsets
    std::vector<std::vector<Bitset>> cadj(r, std::vector<Bitset>(n, Bitset(n)));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) {
                int c = host.get(u, v);
                if (c < r) cadj[c][u].set(v);
            }

    struct ColourState {
        std::vector<int> a;
        std::map<std::vector<int>, std::vector<int>> c_of; // t-subset of the original A -> C(T)
        std::vector<int> d, f;
    };
    std::vector<ColourState> st(r);

    // dependent random choice per colour, globally disjoint
    Bitset allowed(n);
    for (int v = 0; v < n; ++v) allowed.set(v);
    for (int i = 0; i < r; ++i) {
        struct Ctx {
            const std::vector<Bitset>* adj;
        } ctx{&cadj[i]};
        AdjacencyView view{n, &ctx, [](const void* c, int v) -> const Bitset& {
                               return (*static_cast<const Ctx*>(c)->adj)[v];
                           }};
        std::optional<RichSet> rich = drc_core(view, m_sizes[i], t, ell, allowed,
                                               derive_seed(seed, 0xA11, i), params.drc_trial_budget);
        if (!rich || !rich_set_valid_view(view, *rich, m_sizes[i], t, ell)) {
            res.reason = "insufficient density: no rich set for colour " + std::to_string(i);
            return res;
        }
        st[i].a = rich->s;
        for (auto& [xs, cx] : rich->neighbourhoods) st[i].c_of[xs] = cx;
        for (int v : rich->s) allowed.reset(v);
        for (auto& [xs, cx] : rich->neighbourhoods)
            for (int v : cx) allowed.reset(v);
        res.log.push_back("colour " + std::to_string(i) + ": A of " + std::to_string(m_sizes[i]) +
                          ", " + std::to_string(st[i].c_of.size()) + " reserved neighbourhoods");
    }

    // (1) refine every pair (A_i, A_j)
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            if (!refine_pair(host, st[i].a, st[j].a, t, t, res.log,
                             "step1 A" + std::to_string(i) + ",A" + std::to_string(j))) {
                res.reason = "refinement failed between colour sets " + std::to_string(i) + " and " +
                             std::to_string(j);
                return res;
            }
    for (int i = 0; i < r; ++i)
        if (r == 1 && !clique_mono(host, st[i].a)) {
            // a single colour class never gets refined above
            std::vector<int> dummy;
            if (!refine_pair(host, st[i].a, dummy, t, 0, res.log, "step1 A0 alone")) {
                res.reason = "refinement failed inside the single colour set";
                return res;
            }
        }

    // (2) refine (A_j, C_i(T)) for i < j over the current t-subsets of A_i
    for (int j = 1; j < r; ++j)
        for (int i = 0; i < j; ++i)
            for (const std::vector<int>& sub : t_subsets(st[i].a, t)) {
                auto it = st[i].c_of.find(sub);
                if (it == st[i].c_of.end()) continue;
                if (!refine_pair(host, st[j].a, it->second, t, t, res.log,
                                 "step2 A" + std::to_string(j) + ",C" + std::to_string(i))) {
                    res.reason = "refinement failed between A" + std::to_string(j) +
                                 " and a reserved neighbourhood of colour " + std::to_string(i);
                    return res;
                }
            }

    // (3) fix D_j for j = r..1 and refine (A_i, F_j) for i < j
    for (int j = r - 1; j >= 0; --j) {
        if (static_cast<int>(st[j].a.size()) < t) {
            res.reason = "A" + std::to_string(j) + " too small to pick D";
            return res;
        }
        st[j].d.assign(st[j].a.begin(), st[j].a.begin() + t);
        auto it = st[j].c_of.find(st[j].d);
        if (it == st[j].c_of.end()) {
            res.reason = "no reserved neighbourhood for D" + std::to_string(j);
            return res;
        }
        st[j].f = it->second;
        for (int i = 0; i < j; ++i)
            if (!refine_pair(host, st[i].a, st[j].f, t, t, res.log,
                             "step3 A" + std::to_string(i) + ",F" + std::to_string(j))) {
                res.reason = "refinement failed between A" + std::to_string(i) + " and F" +
                             std::to_string(j);
                return res;
            }
    }

    // (4) refine every pair (F_i, F_j)
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            if (!refine_pair(host, st[i].f, st[j].f, t, t, res.log,
                             "step4 F" + std::to_string(i) + ",F" + std::to_string(j))) {
                res.reason = "refinement failed between F" + std::to_string(i) + " and F" +
                             std::to_string(j);
                return res;
            }

    // parts for the witness clique; F trimmed to exactly t
    std::vector<std::vector<int>> parts;
    std::vector<int> part_colour_hint;
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(st[i].f.size()) < t) {
            res.reason = "F" + std::to_string(i) + " too small";
            return res;
        }
        st[i].f.resize(t);
        // D_i may have drifted out of A_i during later refinements of A_i
        if (static_cast<int>(st[i].a.size()) < t) {
            res.reason = "A" + std::to_string(i) + " too small after refinement";
            return res;
        }
        parts.push_back(st[i].d);
        parts.push_back(st[i].f);
    }

    // the pipeline's monochromaticity properties, re-verified from scratch
    int parts_n = static_cast<int>(parts.size());
    std::vector<int> internal_col(parts_n);
    for (int p = 0; p < parts_n; ++p)
        if (!clique_mono(host, parts[p], &internal_col[p])) {
            res.reason = "property failure: part " + std::to_string(p) + " not monochromatic";
            return res;
        }
    std::vector<std::vector<int>> cross_col(parts_n, std::vector<int>(parts_n, -1));
    for (int p = 0; p < parts_n; ++p)
        for (int q = p + 1; q < parts_n; ++q)
            if (!bipartite_mono(host, parts[p], parts[q], &cross_col[p][q])) {
                res.reason = "property failure: parts " + std::to_string(p) + "," +
                             std::to_string(q) + " not monochromatic";
                return res;
            }
    for (int i = 0; i < r; ++i)
        if (cross_col[2 * i][2 * i + 1] != i) {
            res.reason = "property failure: (D,F) bridge of colour " + std::to_string(i) +
                         " has the wrong colour";
            return res;
        }

    // assemble J on 2r coloured vertices and shrink it to an r-minimal core
    ColouredClique j_clique(parts_n, r);
    for (int p = 0; p < parts_n; ++p) j_clique.set_vertex_colour(p, internal_col[p]);
    for (int p = 0; p < parts_n; ++p)
        for (int q = p + 1; q < parts_n; ++q) j_clique.set_edge_colour(p, q, cross_col[p][q]);
    std::uint32_t full = (1u << r) - 1;
    if ((j_clique.colour_span() & full) != full) {
        res.reason = "property failure: assembled clique does not span all colours";
        return res;
    }
    std::vector<int> keep(parts_n);
    std::iota(keep.begin(), keep.end(), 0);
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (std::size_t d = 0; d < keep.size(); ++d) {
            std::vector<int> rest;
            for (std::size_t x = 0; x < keep.size(); ++x)
                if (x != d) rest.push_back(keep[x]);
            if (rest.empty()) continue;
            if ((j_clique.colour_span(rest) & full) == full) {
                keep = std::move(rest);
                shrunk = true;
                break;
            }
        }
    }
    ColouredClique core(static_cast<int>(keep.size()), r);
    for (std::size_t p = 0; p < keep.size(); ++p) {
        core.set_vertex_colour(static_cast<int>(p), j_clique.vertex_colour(keep[p]));
        for (std::size_t q = p + 1; q < keep.size(); ++q)
            core.set_edge_colour(static_cast<int>(p), static_cast<int>(q),
                                 j_clique.edge_colour(keep[p], keep[q]));
    }
    if (!is_r_minimal(core, r)) {
        res.reason = "property failure: shrunken core is not r-minimal";
        return res;
    }

    // locate the family member and build the embedding
    UnavoidableFamily fam = unavoidable_family(r, t);
    ColouredClique blown = coloured_blowup(core, t);
    for (std::size_t mi = 0; mi < fam.members.size(); ++mi) {
        std::optional<std::vector<int>> iso =
            coloured_clique_isomorphism(fam.members[mi], blown, true);
        if (!iso) continue;
        Detection det;
        det.member_index = static_cast<int>(mi);
        det.member = fam.members[mi];
        det.embedding.resize(fam.members[mi].order());
        for (int a = 0; a < fam.members[mi].order(); ++a) {
            int bv = (*iso)[a];
            det.embedding[a] = parts[keep[bv / t]][bv % t];
        }
        // final cross-checks
        for (int a = 0; a < det.member.order(); ++a)
            for (int b = a + 1; b < det.member.order(); ++b)
                if (host.get(det.embedding[a], det.embedding[b]) != det.member.edge_colour(a, b))
                    throw std::logic_error("internal: pipeline embedding mismatch");
        if (!detect_unavoidable(host, fam))
            throw std::logic_error("internal: pipeline found a pattern the detector missed");
        res.found = std::move(det);
        return res;
    }
    res.reason = "internal: blowup of the minimal core matches no family member";
    return res;
}

DensityExperimentReport density_experiment(const DensityExperimentConfig& cfg) {
    if (cfg.trials < 1) throw InvalidInputError("experiment needs at least one trial");
    if (cfg.colours < 1) throw InvalidInputError("experiment needs at least one colour");
    if (cfg.t < 2) throw InvalidInputError("experiment needs t >= 2");
    if (cfg.n < 2 * cfg.colours * cfg.t)
        throw InvalidInputError("experiment needs n >= 2rt");
    long long total = static_cast<long long>(cfg.n) * (cfg.n - 1) / 2;
    if (cfg.min_edges_per_colour < 0 || cfg.min_edges_per_colour > total)
        throw InvalidInputError("edge minimum exceeds the number of edges");

    DensityExperimentReport rep;
    rep.cfg = cfg;
    rep.effective_min = std::min(cfg.min_edges_per_colour, total / cfg.colours);
    rep.adjusted = rep.effective_min != cfg.min_edges_per_colour;
    rep.trials.resize(cfg.trials);

    UnavoidableFamily fam = unavoidable_family(cfg.colours, cfg.t);

    parallel_for(cfg.trials, resolve_workers(cfg.workers), [&](int trial) {
        TrialOutcome out;
        EdgeColouring col(cfg.n, cfg.colours);
        for (int attempt = 0; attempt < cfg.max_attempts_per_trial; ++attempt) {
            std::uint64_t s = derive_seed(cfg.seed, trial, attempt);
            Rng rng(s);
            std::vector<long long> count(cfg.colours, 0);
            for (int u = 0; u < cfg.n; ++u)
                for (int v = u + 1; v < cfg.n; ++v) {
                    int c = static_cast<int>(rng.below(cfg.colours));
                    col.set(u, v, c);
                    ++count[c];
                }
            bool dense_enough = true;
            for (long long c : count)
                if (c < rep.effective_min) dense_enough = false;
            if (dense_enough) {
                out.seed = s;
                out.attempts = attempt + 1;
                auto start = std::chrono::steady_clock::now();
                std::optional<Detection> det = detect_unavoidable(col, fam);
                out.detect_ms =
                    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                        .count();
                out.success = det.has_value();
                out.member_index = det ? det->member_index : -1;
                break;
            }
        }
        rep.trials[trial] = out;
    });
    for (const TrialOutcome& t : rep.trials)
        if (t.attempts == 0)
            throw InvalidInputError("rejection sampling failed; the edge minimum is too demanding");

    int successes = 0;
    double ms = 0.0;
    for (const TrialOutcome& t : rep.trials) {
        successes += t.success ? 1 : 0;
        ms += t.detect_ms;
    }
    rep.success_fraction = static_cast<double>(successes) / cfg.trials;
    rep.mean_detect_ms = ms / cfg.trials;
    return rep;
}

ColouredClique parse_coloured_clique(const std::string& content) {
    std::istringstream in(content);
    std::string line;
    int lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            std::size_t at = line.find_first_not_of(" \t\r");
            if (at != std::string::npos && line[at] != '#') return true;
        }
        return false;
    };
    if (!next_line()) throw InvalidInputError("empty coloured clique input");
    std::istringstream head(line);
    int k, r;
    if (!(head >> k >> r) || k < 1 || r < 1)
        throw InvalidInputError("line " + std::to_string(lineno) + ": expected \"k r\"");
    ColouredClique c(k, r);
    if (!next_line()) throw InvalidInputError("missing vertex colour line");
    std::istringstream vrow(line);
    for (int v = 0; v < k; ++v) {
        int col;
        if (!(vrow >> col) || col < 0 || col >= r)
            throw InvalidInputError("line " + std::to_string(lineno) + ": bad vertex colour");
        c.set_vertex_colour(v, col);
    }
    for (int i = 0; i < k * (k - 1) / 2; ++i) {
        if (!next_line()) throw InvalidInputError("line " + std::to_string(lineno) + ": missing edges");
        std::istringstream row(line);
        int u, v, col;
        if (!(row >> u >> v >> col))
            throw InvalidInputError("line " + std::to_string(lineno) + ": expected \"u v c\"");
        if (u < 0 || v < 0 || u >= k || v >= k || u == v || col < 0 || col >= r)
            throw InvalidInputError("line " + std::to_string(lineno) + ": index or colour out of range");
        if (c.edge_colour(u, v) >= 0)
            throw InvalidInputError("line " + std::to_string(lineno) + ": edge coloured twice");
        c.set_edge_colour(u, v, col);
    }
    return c;
}

std::string coloured_clique_to_text(const ColouredClique& c) {
    std::ostringstream out;
    out << c.order() << ' ' << c.colours() << '\n';
    for (int v = 0; v < c.order(); ++v) out << (v ? " " : "") << c.vertex_colour(v);
    out << '\n';
    for (int u = 0; u < c.order(); ++u)
        for (int v = u + 1; v < c.order(); ++v) out << u << ' ' << v << ' ' << c.edge_colour(u, v) << '\n';
    return out.str();
}

ColouredClique load_coloured_clique_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open coloured clique file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_coloured_clique(buf.str());
    } catch (const InvalidInputError& e) {
        throw InvalidInputError(path + ": " + e.what());
    }
}

} // namespace rlab
