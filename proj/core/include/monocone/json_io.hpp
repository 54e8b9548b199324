#pragma once

#include <nlohmann/json.hpp>

#include "monocone/cone.hpp"
#include "monocone/entropy.hpp"
#include "monocone/functional.hpp"
#include "monocone/monotonicity.hpp"
#include "monocone/witness.hpp"

namespace monocone {

using Json = nlohmann::json;

// {"n": 4, "coeffs": {"1,2": "1", "1,2,3": "-1", ...}}; omitted subsets are zero.
Json to_json(const Functional& alpha);
Functional functional_from_json(const Json& j);

// {"variables": [...], "cardinalities": [...], "atoms": [{"outcome": [...], "p": "1/4"}, ...]}
Json to_json(const JointDistribution& d);
JointDistribution distribution_from_json(const Json& j);

// {"n": .., "exact": .., "values": {"1": "1", ...}} (all subsets listed).
Json to_json(const EntropyVector& h);

Json to_json(const HRep& h);
Json to_json(const VRep& v);

Json to_json(const LowerSetFamily& family);

Json to_json(const DecompositionCertificate& certificate);
DecompositionCertificate decomposition_from_json(const Json& j);

Json to_json(const ViolationCertificate& certificate);
ViolationCertificate violation_certificate_from_json(const Json& j);

}  // namespace monocone
