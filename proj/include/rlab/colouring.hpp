#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rlab/graph.hpp"

namespace rlab {

// Assignment of colours {0..r-1} to edges of a host on n vertices, stored
// densely. May be partial (-1 = uncoloured); operations that need totality
// check it against their host graph. Convention: 0 = red, 1 = blue.
class EdgeColouring {
public:
    EdgeColouring() = default;
    EdgeColouring(int host_vertices, int colours);

    int colours() const { return r_; }
    int host_vertices() const { return n_; }

    bool has(int u, int v) const { return cell(u, v) >= 0; }
    bool has(Edge e) const { return has(e.u, e.v); }
    // -1 when uncoloured
    int get(int u, int v) const { return cell(u, v); }
    int get(Edge e) const { return cell(e.u, e.v); }
    void set(int u, int v, int colour);
    void set(Edge e, int colour) { set(e.u, e.v, colour); }
    void unset(int u, int v);

    std::size_t assigned_count() const { return assigned_; }
    bool total_on(const Graph& host) const;
    bool domain_within(const Graph& host) const;
    // coloured edges in lexicographic order
    std::vector<Edge> coloured_edges() const;

    bool operator==(const EdgeColouring&) const = default;

private:
    int cell(int u, int v) const { return m_[static_cast<std::size_t>(u) * n_ + v]; }
    int r_ = 0, n_ = 0;
    std::size_t assigned_ = 0;
    std::vector<std::int8_t> m_;
};

// A partial colouring is the same object; the invariants differ per use.
using PartialColouring = EdgeColouring;

// Lines "u v c". For partial colourings, absent lines mean uncoloured.
EdgeColouring parse_colouring(const std::string& content, int host_vertices, int colours);
std::string colouring_to_text(const EdgeColouring& c);
EdgeColouring load_colouring_file(const std::string& path, int host_vertices, int colours);

} // namespace rlab
