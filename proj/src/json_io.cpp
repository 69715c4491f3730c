#include "graphalg/json_io.hpp"

#include "graphalg/errors.hpp"

namespace graphalg {

namespace {

long long narrow(const BigInt& v, const char* what) {
    if (!v.fits_int64()) throw CapacityError(std::string(what) + " exceeds the JSON integer range");
    return v.to_int64();
}

Json int_array(const std::vector<BigInt>& xs, const char* what) {
    Json a = Json::array();
    for (const auto& x : xs) a.push_back(narrow(x, what));
    return a;
}

}  // namespace

Json invariants_json(const K0Data& k0, const K1Data& k1, const DetSign& det) {
    Json j;
    j["k0"]["invariant_factors"] = int_array(k0.invariant_factors, "invariant factor");
    j["k0"]["free_rank"] = k0.free_rank;
    if (k0.unit_class) {
        Json u;
        u["torsion"] = int_array(k0.unit_class->torsion, "unit class coordinate");
        u["free"] = int_array(k0.unit_class->free_part, "unit class coordinate");
        j["k0"]["unit_class"] = u;
    } else {
        j["k0"]["unit_class"] = nullptr;
    }
    j["k1"]["top_free_rank"] = k1.top_free_rank;
    j["k1"]["algebraic"]["divisible_rank"] = k1.algebraic_divisible_rank;
    j["k1"]["algebraic"]["free_rank"] = k1.algebraic_free_rank;
    switch (det.value) {
        case DetSignValue::negative: j["det"]["sign"] = "-"; break;
        case DetSignValue::zero: j["det"]["sign"] = "0"; break;
        case DetSignValue::positive: j["det"]["sign"] = "+"; break;
        case DetSignValue::undefined_has_sinks: j["det"]["sign"] = "undefined"; break;
    }
    if (det.det)
        j["det"]["value"] = det.det->to_string();
    else
        j["det"]["value"] = nullptr;
    return j;
}

Json classification_json(const Classification& c) {
    Json j;
    j["unital"] = c.unital;
    j["acyclic"] = c.acyclic;
    if (c.finite_dimensional)
        j["finite_dimensional"] = int_array(*c.finite_dimensional, "matrix block size");
    else
        j["finite_dimensional"] = nullptr;
    j["simple"] = c.simple;
    j["purely_infinite_simple"] = c.purely_infinite_simple;
    j["af"] = c.af;
    return j;
}

Json verdict_json(const Verdict& v) {
    Json j;
    j["relation"] = to_string(v.relation);
    j["algebra"] = to_string(v.algebra);
    j["answer"] = to_string(v.answer);
    j["justifications"] = v.justifications;
    return j;
}

Json census_json(const CensusReport& r) {
    Json j;
    Json by;
    for (const auto& [n, count] : r.by_vertices) by[std::to_string(n)] = count;
    j["by_vertices"] = by;
    j["all_det_negative"] = r.all_det_negative;
    Json graphs = Json::array();
    for (const auto& g : r.graphs) graphs.push_back(g.to_dsl());
    j["graphs"] = graphs;
    return j;
}

}  // namespace graphalg
