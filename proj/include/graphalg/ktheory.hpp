#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphalg/graph.hpp"
#include "graphalg/zlinalg.hpp"

namespace graphalg {

// Canonical coordinates of a K0 class: torsion residues aligned with the
// invariant factors, then free coordinates.
struct UnitClass {
    std::vector<BigInt> torsion;
    std::vector<BigInt> free_part;
    friend bool operator==(const UnitClass&, const UnitClass&) = default;
};

// K0 of the graph algebra as a presented abelian group, with the class of
// the identity when the algebra is unital (plain finite graphs; absent for
// stabilizations).
struct K0Data {
    std::vector<BigInt> invariant_factors;  // > 1 only
    size_t free_rank = 0;
    std::optional<UnitClass> unit_class;
    IntMatrix presentation_matrix;

    bool group_trivial() const { return invariant_factors.empty() && free_rank == 0; }
};

// K1 rank data. The C^x-cokernel of the presentation map collapses to a
// divisible group of the stated rank (every complex number has d-th roots),
// so ranks are a complete invariant of the displayed form.
struct K1Data {
    size_t top_free_rank = 0;
    size_t algebraic_divisible_rank = 0;
    size_t algebraic_free_rank = 0;
    friend bool operator==(const K1Data&, const K1Data&) = default;
};

enum class DetSignValue { negative, zero, positive, undefined_has_sinks };

struct DetSign {
    DetSignValue value = DetSignValue::undefined_has_sinks;
    std::optional<BigInt> det;
    friend bool operator==(const DetSign&, const DetSign&) = default;
};

// The |E^0| x |E^0_reg| map whose cokernel presents K0: the column for a
// regular vertex v is (A^t - I) applied to the basis vector of v. Equals
// A^t - I when the graph has no sinks.
IntMatrix presentation_map(const Graph& g);

K0Data k0(const Graph& g);
K0Data k0(const StabilizedGraph& s);  // same group data, no unit class
K1Data k1(const Graph& g);
K1Data k1(const StabilizedGraph& s);
DetSign det_sign(const Graph& g);

// Reduce an arbitrary integer vertex-vector into the K0 coordinates of k.
UnitClass reduce_in_k0(const K0Data& k, const std::vector<BigInt>& x);

// Complete invariant of the pair (K0, [1]) up to pair isomorphism: group
// data, the gcd of the free part of the unit, and the canonical Aut(T)-orbit
// representative of the torsion part of the unit in T/gT.
struct PairDescriptor {
    std::vector<BigInt> invariant_factors;
    size_t free_rank = 0;
    BigInt unit_free_gcd;                    // 0 when the free part vanishes
    std::vector<BigInt> torsion_orbit_rep;   // coordinates mod gcd(g, d_i)
    friend bool operator==(const PairDescriptor&, const PairDescriptor&) = default;
};

// Throws std::invalid_argument without a unit class; CapacityError when the
// torsion group is too large to enumerate (|T| > 10^4 or automorphism
// candidate space beyond 10^7).
PairDescriptor pair_canonical_form(const K0Data& k);

bool group_iso(const K0Data& a, const K0Data& b);
bool pair_iso(const K0Data& a, const K0Data& b);

// Enumerates Aut(T) for T = Z/d_1 (+) ... (+) Z/d_k as generator-image
// matrices (column j = image of generator j). Exposed for the orbit
// machinery; guarded by the same capacity limits as pair_canonical_form.
std::vector<std::vector<std::vector<long long>>> torsion_automorphisms(
    const std::vector<long long>& factors);

}  // namespace graphalg
