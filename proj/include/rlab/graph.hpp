#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "rlab/bitset.hpp"

namespace rlab {

// Undirected edge, stored with u < v.
struct Edge {
    int u = 0, v = 0;
    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
    auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
public:
    Graph() = default;
    // validates: endpoints in range, no loops, no duplicates
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool adjacent(int u, int v) const { return u != v && adj_[u].test(v); }
    const Bitset& neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    int min_degree() const;

    // index into edges() (lexicographic), -1 if not an edge
    int edge_index(Edge e) const;
    bool has_edge(Edge e) const { return edge_index(e) >= 0; }

    Graph without_edge(Edge e) const;
    Graph with_edge(Edge e) const;

    // empty and one-vertex graphs count as connected
    bool connected() const;
    bool is_tree() const;
    // is the subgraph induced on `inside` bipartite?
    bool induced_bipartite(const Bitset& inside) const;
    // is the graph connected after deleting `removed`?
    bool connected_without(const Bitset& removed) const;

    // brute-force canonical labelling; only for small graphs (n <= 9)
    std::vector<std::uint8_t> canonical_form() const;

    bool operator==(const Graph&) const = default;

    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n); // on n vertices, n-1 edges
    static Graph complete_bipartite(int a, int b);
    static Graph star(int leaves);
    // k triangles sharing exactly one vertex (vertex 0); F_2 = friendship(2)
    static Graph friendship(int k);

private:
    int n_ = 0;
    std::vector<Edge> edges_; // sorted
    std::vector<Bitset> adj_;
    std::unordered_map<std::uint64_t, int> index_;
};

// "n m" header plus m lines "u v"; a leading ">>graph6<<" header switches to
// graph6. Throws InvalidInputError with line numbers.
Graph parse_graph(const std::string& content);
Graph parse_graph6(const std::string& payload);
std::string graph_to_text(const Graph& g);

Graph load_graph_file(const std::string& path);

} // namespace rlab
