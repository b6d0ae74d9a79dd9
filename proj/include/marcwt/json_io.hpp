#pragma once

#include <string>

#include <json.hpp>

#include "marcwt/dm.hpp"
#include "marcwt/geometry.hpp"
#include "marcwt/pmf.hpp"

namespace marcwt {

// {"variables": [{"name": str, "size": int}, ...],
//  "probs": flat array, lexicographic, last variable fastest}
// `where` prefixes error messages with a JSON-pointer-style path.
JointPmf pmf_from_json(const nlohmann::json& doc, const std::string& where = "");

// Same document layout; the outputs|given split comes from `signature`
// (e.g. "X1|V1"), whose variables must match the document's, in order.
ConditionalPmf conditional_from_json(const std::string& signature,
                                     const nlohmann::json& doc,
                                     const std::string& where = "");

// {"theorem": "T1"|"T2"|"T3"|"T41", "factors": {signature -> document},
//  "r_star": number (T3 only)}
DmFactorization dm_from_json(const nlohmann::json& doc);

// Report body shared by the gauss and dm subcommands: strategy, branch,
// feasible, caps_bits [r1,r2,sum effective caps], area_bits2, params.
nlohmann::json region_report(const std::string& strategy,
                             const std::string& branch,  // "" -> null
                             bool feasible,
                             const RateRegion& region,
                             nlohmann::json params);

}  // namespace marcwt
