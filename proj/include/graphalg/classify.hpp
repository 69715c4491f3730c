#pragma once

#include <map>
#include <optional>
#include <vector>

#include "graphalg/graph.hpp"

namespace graphalg {

// Structural classification of the graph algebra; the same verdicts serve
// the Leavitt path algebra and the graph C*-algebra.
struct Classification {
    bool unital = true;  // finite graphs always
    bool acyclic = false;
    // matrix block sizes n(v_i), ascending; present iff acyclic
    std::optional<std::vector<BigInt>> finite_dimensional;
    bool simple = false;
    bool purely_infinite_simple = false;
    bool af = false;
    friend bool operator==(const Classification&, const Classification&) = default;
};

// For each sink, the number of finite paths ending there (counting the
// trivial path). Throws std::invalid_argument on a graph with a cycle.
std::map<uint32_t, BigInt> path_counts_to_sinks(const Graph& g);

// The multiset {n(v_i)} over sinks; the algebra is the direct sum of the
// corresponding full matrix algebras.
std::vector<BigInt> finite_dimensional_structure(const Graph& g);

bool is_simple(const Graph& g);
bool is_purely_infinite_simple(const Graph& g);

Classification classify(const Graph& g);

}  // namespace graphalg
