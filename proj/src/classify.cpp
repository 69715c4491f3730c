#include "graphalg/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace graphalg {

namespace {

// topological order of an acyclic graph (sources first)
std::vector<uint32_t> topo_order(const Graph& g) {
    size_t n = g.vertex_count();
    std::vector<size_t> indeg(n, 0);
    for (const auto& e : g.edges()) ++indeg[e.dst];
    std::vector<uint32_t> order;
    std::vector<uint32_t> ready;
    for (uint32_t v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push_back(v);
    while (!ready.empty()) {
        uint32_t v = ready.back();
        ready.pop_back();
        order.push_back(v);
        for (uint32_t e : g.out_edges(v))
            if (--indeg[g.edge(e).dst] == 0) ready.push_back(g.edge(e).dst);
    }
    if (order.size() != n) throw std::invalid_argument("graph has a cycle");
    return order;
}

}  // namespace

std::map<uint32_t, BigInt> path_counts_to_sinks(const Graph& g) {
    auto order = topo_order(g);
    // paths ending at v: the trivial path plus one per path into a feeding edge
    std::vector<BigInt> ending(g.vertex_count(), BigInt(1));
    for (uint32_t v : order)
        for (uint32_t e : g.out_edges(v)) ending[g.edge(e).dst] += ending[v];
    std::map<uint32_t, BigInt> out;
    for (uint32_t t : g.sinks()) out.emplace(t, ending[t]);
    return out;
}

std::vector<BigInt> finite_dimensional_structure(const Graph& g) {
    auto counts = path_counts_to_sinks(g);
    std::vector<BigInt> sizes;
    sizes.reserve(counts.size());
    for (auto& [v, n] : counts) sizes.push_back(n);
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

bool is_simple(const Graph& g) {
    // the empty graph presents the zero ring, which is not simple
    return g.vertex_count() > 0 && g.condition_L() && g.is_cofinal() && g.reaches_all_sinks();
}

bool is_purely_infinite_simple(const Graph& g) { return is_simple(g) && g.has_cycle(); }

Classification classify(const Graph& g) {
    Classification c;
    c.unital = true;
    c.acyclic = g.is_acyclic();
    c.af = c.acyclic;
    if (c.acyclic) c.finite_dimensional = finite_dimensional_structure(g);
    c.simple = is_simple(g);
    c.purely_infinite_simple = c.simple && !c.acyclic;
    // simple algebras fall on exactly one side of the dichotomy
    if (c.simple && c.acyclic && c.finite_dimensional->size() != 1)
        throw std::logic_error("classify: simple acyclic graph with multiple blocks");
    return c;
}

}  // namespace graphalg
