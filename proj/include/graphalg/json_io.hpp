#pragma once

#include <json.hpp>

#include "graphalg/classify.hpp"
#include "graphalg/compare.hpp"
#include "graphalg/enumerate.hpp"
#include "graphalg/ktheory.hpp"

namespace graphalg {

using Json = nlohmann::ordered_json;

// {"k0":{...},"k1":{...},"det":{...}} — the machine-readable invariant bundle
Json invariants_json(const K0Data& k0, const K1Data& k1, const DetSign& det);

Json classification_json(const Classification& c);

Json verdict_json(const Verdict& v);

Json census_json(const CensusReport& r);

}  // namespace graphalg
