#include "rlab/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "rlab/errors.hpp"

namespace rlab {

namespace {
std::uint64_t key(Edge e) { return (static_cast<std::uint64_t>(e.u) << 32) | static_cast<std::uint32_t>(e.v); }
} // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw InvalidInputError("negative vertex count");
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        Edge e = edges_[i];
        if (e.u == e.v) throw InvalidInputError("self-loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v >= n_)
            throw InvalidInputError("edge endpoint out of range: " + std::to_string(e.u) + " " +
                                    std::to_string(e.v));
        if (i > 0 && edges_[i - 1] == e)
            throw InvalidInputError("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    adj_.assign(n_, Bitset(n_));
    index_.reserve(edges_.size() * 2);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        adj_[edges_[i].u].set(edges_[i].v);
        adj_[edges_[i].v].set(edges_[i].u);
        index_[key(edges_[i])] = static_cast<int>(i);
    }
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::edge_index(Edge e) const {
    auto it = index_.find(key(e));
    return it == index_.end() ? -1 : it->second;
}

Graph Graph::without_edge(Edge e) const {
    int idx = edge_index(e);
    if (idx < 0) throw InvalidInputError("cannot remove a missing edge");
    std::vector<Edge> es = edges_;
    es.erase(es.begin() + idx);
    return Graph(n_, std::move(es));
}

Graph Graph::with_edge(Edge e) const {
    std::vector<Edge> es = edges_;
    es.push_back(e);
    return Graph(n_, std::move(es));
}

bool Graph::connected() const {
    if (n_ <= 1) return true;
    return connected_without(Bitset(n_));
}

bool Graph::is_tree() const {
    return connected() && edge_count() == n_ - 1;
}

bool Graph::induced_bipartite(const Bitset& inside) const {
    std::vector<int> side(n_, -1);
    for (int s = 0; s < n_; ++s) {
        if (!inside.test(s) || side[s] != -1) continue;
        side[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w = adj_[u].first_set_at_least(0); w != -1; w = adj_[u].first_set_at_least(w + 1)) {
                if (!inside.test(w)) continue;
                if (side[w] == -1) {
                    side[w] = 1 - side[u];
                    stack.push_back(w);
                } else if (side[w] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool Graph::connected_without(const Bitset& removed) const {
    int start = -1, remaining = 0;
    for (int v = 0; v < n_; ++v) {
        if (!removed.test(v)) {
            ++remaining;
            if (start == -1) start = v;
        }
    }
    if (remaining <= 1) return true;
    Bitset seen(n_);
    seen.set(start);
    std::vector<int> stack{start};
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w = adj_[u].first_set_at_least(0); w != -1; w = adj_[u].first_set_at_least(w + 1)) {
            if (removed.test(w) || seen.test(w)) continue;
            seen.set(w);
            ++reached;
            stack.push_back(w);
        }
    }
    return reached == remaining;
}

std::vector<std::uint8_t> Graph::canonical_form() const {
    if (n_ > 9) throw InvalidInputError("canonical_form is brute force, limited to 9 vertices");
    std::vector<int> perm(n_);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint8_t> best;
    do {
        std::vector<std::uint8_t> enc;
        enc.reserve(n_ * (n_ - 1) / 2);
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v) enc.push_back(adjacent(perm[u], perm[v]) ? 1 : 0);
        if (best.empty() || enc < best) best = std::move(enc);
    } while (std::next_permutation(perm.begin(), perm.end()));
    best.insert(best.begin(), static_cast<std::uint8_t>(n_));
    return best;
}

Graph Graph::complete(int n) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph(n, std::move(es));
}

Graph Graph::cycle(int n) {
    std::vector<Edge> es;
    for (int v = 0; v < n; ++v) es.emplace_back(v, (v + 1) % n);
    return Graph(n, std::move(es));
}

Graph Graph::path(int n) {
    std::vector<Edge> es;
    for (int v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
    return Graph(n, std::move(es));
}

Graph Graph::complete_bipartite(int a, int b) {
    std::vector<Edge> es;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) es.emplace_back(u, a + v);
    return Graph(a + b, std::move(es));
}

Graph Graph::star(int leaves) {
    std::vector<Edge> es;
    for (int v = 1; v <= leaves; ++v) es.emplace_back(0, v);
    return Graph(leaves + 1, std::move(es));
}

Graph Graph::friendship(int k) {
    std::vector<Edge> es;
    for (int i = 0; i < k; ++i) {
        int a = 1 + 2 * i, b = 2 + 2 * i;
        es.emplace_back(0, a);
        es.emplace_back(0, b);
        es.emplace_back(a, b);
    }
    return Graph(2 * k + 1, std::move(es));
}

namespace {

int g6_byte(char c, std::size_t pos) {
    int x = static_cast<unsigned char>(c) - 63;
    if (x < 0 || x > 63)
        throw InvalidInputError("graph6: invalid byte at position " + std::to_string(pos));
    return x;
}

} // namespace

Graph parse_graph6(const std::string& payload) {
    std::string s = payload;
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s = s.substr(header.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    if (s.empty()) throw InvalidInputError("graph6: empty payload");

    std::size_t pos = 0;
    long long n;
    if (s[0] != '~') {
        n = g6_byte(s[0], 0);
        pos = 1;
    } else if (s.size() >= 4 && s[1] != '~') {
        n = 0;
        for (int i = 1; i <= 3; ++i) n = (n << 6) | g6_byte(s[i], i);
        pos = 4;
    } else {
        throw InvalidInputError("graph6: vertex counts above 2^18 not supported");
    }
    if (n > 4096) throw InvalidInputError("graph6: graph too large");

    std::vector<Edge> edges;
    int bit = 0;
    int cur = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            if (bit == 0) {
                if (pos >= s.size()) throw InvalidInputError("graph6: payload too short");
                cur = g6_byte(s[pos], pos);
                ++pos;
                bit = 6;
            }
            --bit;
            if ((cur >> bit) & 1) edges.emplace_back(u, v);
        }
    return Graph(static_cast<int>(n), std::move(edges));
}

Graph parse_graph(const std::string& content) {
    std::string trimmed = content;
    std::size_t first = trimmed.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw InvalidInputError("empty graph input");
    if (trimmed.compare(first, 10, ">>graph6<<") == 0) return parse_graph6(trimmed.substr(first));

    std::istringstream in(content);
    std::string line;
    int lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos && line[line.find_first_not_of(" \t\r")] != '#')
                return true;
        }
        return false;
    };
    if (!next_line()) throw InvalidInputError("empty graph input");
    std::istringstream head(line);
    long long n, m;
    if (!(head >> n >> m) || n < 0 || m < 0)
        throw InvalidInputError("line " + std::to_string(lineno) + ": expected \"n m\" header");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (long long i = 0; i < m; ++i) {
        if (!next_line()) throw InvalidInputError("line " + std::to_string(lineno) + ": expected " +
                                                  std::to_string(m) + " edges, got " + std::to_string(i));
        std::istringstream row(line);
        long long u, v;
        if (!(row >> u >> v))
            throw InvalidInputError("line " + std::to_string(lineno) + ": expected \"u v\"");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InvalidInputError("line " + std::to_string(lineno) + ": vertex index out of range");
        if (u == v) throw InvalidInputError("line " + std::to_string(lineno) + ": self-loop");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string graph_to_text(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (Edge e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_graph(buf.str());
    } catch (const InvalidInputError& e) {
        throw InvalidInputError(path + ": " + e.what());
    }
}

} // namespace rlab
