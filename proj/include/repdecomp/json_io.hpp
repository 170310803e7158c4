#pragma once

#include "json.hpp"

#include "repdecomp/detector.hpp"
#include "repdecomp/highest_weight.hpp"
#include "repdecomp/lr.hpp"
#include "repdecomp/partition_count.hpp"

namespace repdecomp {

using Json = nlohmann::ordered_json;

/// Canonical decomposition schema:
/// {"terms":[{"weight":[..],"mult":"<decimal>"}, ...]} in stripping order.
/// Multiplicities are decimal strings so arbitrary precision survives any
/// consumer.
Json to_json(const Decomposition& d);
Json to_json(const SchurDecomp& d);
Json to_json(const DetectionReport& r);
Json to_json(const IdentityReport& r);
Json to_json(const GL9Report& r);
Json to_json(const A1Report& r);
Json to_json(const A2Report& r);
Json to_json(const SchurReport& r);
Json to_json(const RSReport& r);

/// Inverse of the decomposition schema, for round-trip checks.
Decomposition decomposition_from_json(const Json& j, Ambient ambient);
SchurDecomp schur_decomp_from_json(const Json& j, int rank_m);

}  // namespace repdecomp
