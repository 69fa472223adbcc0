#include "rlab/blowup.hpp"

#include <algorithm>

#include "rlab/errors.hpp"

namespace rlab {

int BlowupSpec::min_multiplicity() const {
    int m = multiplicity.empty() ? 0 : multiplicity[0];
    for (int x : multiplicity) m = std::min(m, x);
    return m;
}

void BlowupSpec::validate_for(const Graph& base) const {
    if (static_cast<int>(multiplicity.size()) != base.vertex_count())
        throw InvalidInputError("blowup spec domain does not match the vertex set");
    for (std::size_t x = 0; x < multiplicity.size(); ++x)
        if (multiplicity[x] < 1)
            throw InvalidInputError("blowup multiplicity of vertex " + std::to_string(x) +
                                    " must be positive");
}

BlownGraph blowup(const Graph& base, const BlowupSpec& spec) {
    spec.validate_for(base);
    BlownGraph out;
    out.base = base;
    out.spec = spec;
    out.part.resize(base.vertex_count());
    int total = 0;
    for (int x = 0; x < base.vertex_count(); ++x) {
        for (int i = 1; i <= spec.multiplicity[x]; ++i) {
            out.part[x].push_back(total);
            out.origin.emplace_back(x, i);
            ++total;
        }
    }
    std::vector<Edge> edges;
    for (Edge e : base.edges())
        for (int p : out.part[e.u])
            for (int q : out.part[e.v]) edges.emplace_back(p, q);
    out.graph = Graph(total, std::move(edges));
    return out;
}

EdgeColouring lift_colouring(const EdgeColouring& c, const Graph& base, const BlowupSpec& spec) {
    if (!c.total_on(base)) throw PreconditionError("lift_colouring needs a total base colouring");
    BlownGraph bl = blowup(base, spec);
    EdgeColouring out(bl.graph.vertex_count(), c.colours());
    for (Edge e : base.edges()) {
        int col = c.get(e);
        for (int p : bl.part[e.u])
            for (int q : bl.part[e.v]) out.set(p, q, col);
    }
    return out;
}

} // namespace rlab
