#include "graphalg/compare.hpp"

#include "graphalg/classify.hpp"
#include "graphalg/ktheory.hpp"

namespace graphalg {

namespace {

Verdict make(Relation r, AlgebraKind a, Answer ans, std::vector<std::string> js) {
    return Verdict{r, a, ans, std::move(js)};
}

}  // namespace

Verdict compare(const Graph& gE, const Graph& gF, Relation relation, AlgebraKind algebra) {
    namespace j = justification;
    K0Data k0E = k0(gE), k0F = k0(gF);
    K1Data k1E = k1(gE), k1F = k1(gF);

    // 1. invariant mismatches settle isomorphism negatively in any regime
    if (relation == Relation::isomorphism) {
        if (!group_iso(k0E, k0F))
            return make(relation, algebra, Answer::NO, {j::k0_mismatch});
        if (!(k1E == k1F))
            return make(relation, algebra, Answer::NO, {j::k1_mismatch});
        if (!pair_iso(k0E, k0F))
            return make(relation, algebra, Answer::NO, {j::unit_mismatch});
    }

    Classification cE = classify(gE), cF = classify(gF);

    // 2. both finite dimensional: block structure decides everything
    if (cE.acyclic && cF.acyclic) {
        const auto& bE = *cE.finite_dimensional;
        const auto& bF = *cF.finite_dimensional;
        if (relation == Relation::isomorphism) {
            Answer ans = bE == bF ? Answer::YES : Answer::NO;
            return make(relation, algebra, ans, {j::prop_structure});
        }
        Answer ans = bE.size() == bF.size() ? Answer::YES : Answer::NO;
        return make(relation, algebra, ans, {j::morita_block_count});
    }

    // 3. both purely infinite simple: classification by (K0, [1], det sign)
    if (cE.purely_infinite_simple && cF.purely_infinite_simple) {
        bool groups = group_iso(k0E, k0F);
        bool pairs = groups && pair_iso(k0E, k0F);
        bool dets = det_sign(gE).value == det_sign(gF).value;
        if (algebra == AlgebraKind::cstar) {
            if (relation == Relation::isomorphism)
                return pairs ? make(relation, algebra, Answer::YES, {j::kp_classification})
                             : make(relation, algebra, Answer::NO, {j::unit_mismatch});
            return groups ? make(relation, algebra, Answer::YES, {j::kp_classification})
                          : make(relation, algebra, Answer::NO, {j::k0_mismatch});
        }
        if (relation == Relation::isomorphism) {
            // invariants already match here (rule 1 passed)
            if (dets) return make(relation, algebra, Answer::YES, {j::alps_det_sign});
            return make(relation, algebra, Answer::UNKNOWN, {j::open_sign});
        }
        if (!groups) return make(relation, algebra, Answer::NO, {j::k0_mismatch});
        if (dets) return make(relation, algebra, Answer::YES, {j::alps_det_sign});
        return make(relation, algebra, Answer::UNKNOWN, {j::open_sign});
    }

    return make(relation, algebra, Answer::UNKNOWN, {j::outside});
}

Verdict compare_stabilized(const StabilizedGraph& sE, const StabilizedGraph& sF,
                           Relation relation, AlgebraKind algebra) {
    Verdict inner = compare(sE.base, sF.base, Relation::morita, algebra);
    Verdict out;
    out.relation = relation;
    out.algebra = algebra;
    out.answer = inner.answer;
    out.justifications.push_back(justification::minfty_bridge);
    out.justifications.insert(out.justifications.end(), inner.justifications.begin(),
                              inner.justifications.end());
    return out;
}

std::string to_string(Relation r) {
    return r == Relation::isomorphism ? "isomorphism" : "morita";
}

std::string to_string(AlgebraKind a) { return a == AlgebraKind::leavitt ? "leavitt" : "cstar"; }

std::string to_string(Answer a) {
    switch (a) {
        case Answer::YES: return "YES";
        case Answer::NO: return "NO";
        default: return "UNKNOWN";
    }
}

}  // namespace graphalg
