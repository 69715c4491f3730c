#pragma once

#include <string>
#include <vector>

#include "graphalg/graph.hpp"

namespace graphalg {

enum class Relation { isomorphism, morita };
enum class AlgebraKind { leavitt, cstar };
enum class Answer { YES, NO, UNKNOWN };

// Justification vocabulary (stable wire strings).
namespace justification {
inline constexpr const char* prop_structure = "prop-3.4-structure";
inline constexpr const char* kp_classification = "kp-classification";
inline constexpr const char* alps_det_sign = "alps-det-sign";
inline constexpr const char* k0_mismatch = "k0-invariant-mismatch";
inline constexpr const char* k1_mismatch = "k1-invariant-mismatch";
inline constexpr const char* unit_mismatch = "unit-class-mismatch";
inline constexpr const char* morita_block_count = "morita-block-count";
inline constexpr const char* minfty_bridge = "minfty-bridge";
inline constexpr const char* open_sign = "open-sign-question";
inline constexpr const char* outside = "outside-settled-regimes";
}  // namespace justification

struct Verdict {
    Relation relation;
    AlgebraKind algebra;
    Answer answer;
    std::vector<std::string> justifications;
};

// Decides whether the graph algebras of gE and gF stand in the requested
// relation, exactly in the settled regimes; answers UNKNOWN otherwise.
// Rule order: invariant-mismatch NO, finite-dimensional rule, purely
// infinite rule, UNKNOWN.
Verdict compare(const Graph& gE, const Graph& gF, Relation relation, AlgebraKind algebra);

// Isomorphism of stabilizations is Morita equivalence of the bases.
Verdict compare_stabilized(const StabilizedGraph& sE, const StabilizedGraph& sF,
                           Relation relation, AlgebraKind algebra);

std::string to_string(Relation r);
std::string to_string(AlgebraKind a);
std::string to_string(Answer a);

}  // namespace graphalg
