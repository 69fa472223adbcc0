#include "rlab/colouring.hpp"

#include <fstream>
#include <sstream>

#include "rlab/errors.hpp"

namespace rlab {

EdgeColouring::EdgeColouring(int host_vertices, int colours)
    : r_(colours), n_(host_vertices), m_(static_cast<std::size_t>(host_vertices) * host_vertices, -1) {
    if (colours < 1 || colours > 127) throw InvalidInputError("colour count must be in 1..127");
    if (host_vertices < 0) throw InvalidInputError("negative vertex count");
}

void EdgeColouring::set(int u, int v, int colour) {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
        throw InvalidInputError("colouring: bad edge " + std::to_string(u) + " " + std::to_string(v));
    if (colour < 0 || colour >= r_)
        throw InvalidInputError("colouring: colour " + std::to_string(colour) + " out of range");
    if (!has(u, v)) ++assigned_;
    m_[static_cast<std::size_t>(u) * n_ + v] = static_cast<std::int8_t>(colour);
    m_[static_cast<std::size_t>(v) * n_ + u] = static_cast<std::int8_t>(colour);
}

void EdgeColouring::unset(int u, int v) {
    if (has(u, v)) --assigned_;
    m_[static_cast<std::size_t>(u) * n_ + v] = -1;
    m_[static_cast<std::size_t>(v) * n_ + u] = -1;
}

bool EdgeColouring::total_on(const Graph& host) const {
    if (host.vertex_count() != n_) return false;
    for (Edge e : host.edges())
        if (!has(e)) return false;
    return true;
}

bool EdgeColouring::domain_within(const Graph& host) const {
    if (host.vertex_count() != n_) return false;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has(u, v) && !host.adjacent(u, v)) return false;
    return true;
}

std::vector<Edge> EdgeColouring::coloured_edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has(u, v)) out.emplace_back(u, v);
    return out;
}

EdgeColouring parse_colouring(const std::string& content, int host_vertices, int colours) {
    EdgeColouring c(host_vertices, colours);
    std::istringstream in(content);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t at = line.find_first_not_of(" \t\r");
        if (at == std::string::npos || line[at] == '#') continue;
        std::istringstream row(line);
        long long u, v, col;
        if (!(row >> u >> v >> col))
            throw InvalidInputError("line " + std::to_string(lineno) + ": expected \"u v c\"");
        if (u < 0 || v < 0 || u >= host_vertices || v >= host_vertices || u == v)
            throw InvalidInputError("line " + std::to_string(lineno) + ": vertex index out of range");
        if (col < 0 || col >= colours)
            throw InvalidInputError("line " + std::to_string(lineno) + ": colour out of range");
        if (c.has(static_cast<int>(u), static_cast<int>(v)))
            throw InvalidInputError("line " + std::to_string(lineno) + ": edge coloured twice");
        c.set(static_cast<int>(u), static_cast<int>(v), static_cast<int>(col));
    }
    return c;
}

std::string colouring_to_text(const EdgeColouring& c) {
    std::ostringstream out;
    for (Edge e : c.coloured_edges()) out << e.u << ' ' << e.v << ' ' << c.get(e) << '\n';
    return out.str();
}

EdgeColouring load_colouring_file(const std::string& path, int host_vertices, int colours) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open colouring file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_colouring(buf.str(), host_vertices, colours);
    } catch (const InvalidInputError& e) {
        throw InvalidInputError(path + ": " + e.what());
    }
}

} // namespace rlab
