#pragma once

#include <array>
#include <functional>
#include <map>
#include <vector>

#include "graphalg/compare.hpp"
#include "graphalg/graph.hpp"

namespace graphalg {

// Multiplicity matrix minimized over all vertex permutations (row-major
// lexicographic order); equal canonical forms characterize isomorphism.
std::vector<long long> canonical_adjacency(const Graph& g);

bool graphs_isomorphic(const Graph& a, const Graph& b);

// One representative per isomorphism class of graphs on exactly
// `vertex_count` vertices (<= 4), with edge multiplicities capped at 1, or at
// 2 when allow_parallel is set, filtered by the predicate. Deterministic
// ascending order of canonical matrices.
std::vector<Graph> enumerate_graphs(size_t vertex_count, bool allow_parallel,
                                    const std::function<bool(const Graph&)>& predicate);

struct CensusReport {
    std::map<size_t, size_t> by_vertices;  // vertex count -> number of graphs
    std::vector<Graph> graphs;             // all representatives, smallest first
    std::vector<BigInt> dets;              // det(I - A^t) per graph
    bool all_det_negative = true;
};

// Enumerates the parallel-free graphs on 1..3 vertices that are cofinal,
// satisfy Condition (L) and contain a cycle (so their algebras are purely
// infinite simple), with the determinant data the classification theory
// keys on.
CensusReport run_census();

struct HarnessReport {
    size_t graph_count = 0;
    size_t pair_count = 0;
    // counts[relation][algebra][answer]
    std::array<std::array<std::array<size_t, 3>, 2>, 2> cells{};
    // leavitt YES with cstar NO for the same relation and pair
    size_t guard_violations = 0;
    // iso YES without morita YES for the same algebra and pair
    size_t monotonicity_violations = 0;
};

// Runs every ordered pair from the corpus through both relations and both
// algebras, tallying verdicts and consistency violations.
HarnessReport conjecture_harness(const std::vector<Graph>& corpus);

}  // namespace graphalg
