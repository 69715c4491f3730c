#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "graphalg/errors.hpp"
#include "graphalg/zlinalg.hpp"

namespace graphalg {

// A simple cycle, stored as its edge index sequence rotated so that the
// lexicographically least vertex name comes first.
struct Cycle {
    std::vector<uint32_t> edges;
    friend bool operator==(const Cycle&, const Cycle&) = default;
};

// Finite directed multigraph with named vertices and edges. Immutable after
// construction; vertex order is declaration order and fixes all matrix
// indexing.
class Graph {
public:
    struct Edge {
        std::string name;
        uint32_t src;
        uint32_t dst;
        friend bool operator==(const Edge&, const Edge&) = default;
    };

    Graph(std::string name, std::vector<std::string> vertices, std::vector<Edge> edges);

    // Line-oriented DSL:
    //   # comment
    //   graph <id>
    //   vertex <id> ...
    //   edge <id> <src> <dst> ...
    // Throws ParseError with 1-based line/column on malformed input.
    static Graph parse(std::string_view dsl);
    std::string to_dsl() const;

    const std::string& name() const { return name_; }
    size_t vertex_count() const { return vertices_.size(); }
    size_t edge_count() const { return edges_.size(); }
    const std::string& vertex_name(size_t v) const { return vertices_[v]; }
    const Edge& edge(size_t e) const { return edges_[e]; }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::optional<uint32_t> find_vertex(std::string_view name) const;
    std::optional<uint32_t> find_edge(std::string_view name) const;
    const std::vector<uint32_t>& out_edges(uint32_t v) const { return out_[v]; }
    size_t out_degree(uint32_t v) const { return out_[v].size(); }

    std::vector<uint32_t> sinks() const;             // vertices emitting no edge
    std::vector<uint32_t> regular_vertices() const;  // vertices emitting >= 1 edge
    std::vector<uint32_t> sources() const;           // vertices receiving no edge

    // entry (v, w) = number of edges v -> w, rows/cols in declaration order
    IntMatrix vertex_matrix() const;

    // reflexive reachability: reach(v, w) iff there is a path v -> w (length >= 0)
    std::vector<std::vector<bool>> reachability() const;

    std::vector<Cycle> simple_cycles() const;
    bool has_cycle() const { return !simple_cycles().empty(); }
    bool is_acyclic() const { return simple_cycles().empty(); }

    // every simple cycle has an exit edge; vacuously true without cycles
    bool condition_L() const;
    // every vertex reaches some vertex of every simple cycle (the finite-graph
    // reading of cofinality); vacuously true for acyclic graphs
    bool is_cofinal() const;
    // every vertex reaches every sink
    bool reaches_all_sinks() const;

    // M_n construction: a directed head of length n-1 grafted onto every
    // vertex; realizes the n x n matrix amplification of the graph algebra.
    Graph mat_n(size_t n) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::string name_;
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<uint32_t>> out_;  // vertex -> emitted edge indices

    std::string fresh_name(std::string base, std::vector<std::string>& taken) const;
};

// Symbolic stabilization marker: the graph with an infinite head attached to
// every vertex. Never materialized; invariant queries delegate to the base.
struct StabilizedGraph {
    Graph base;
    friend bool operator==(const StabilizedGraph&, const StabilizedGraph&) = default;
};

inline StabilizedGraph stabilize(Graph g) { return StabilizedGraph{std::move(g)}; }

using GraphInput = std::variant<Graph, StabilizedGraph>;

// Parses a DSL text, honoring a leading "# stabilized" header.
GraphInput parse_graph_input(std::string_view dsl);
std::string to_dsl(const GraphInput& input);

}  // namespace graphalg
