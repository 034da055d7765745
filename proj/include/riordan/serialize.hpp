#pragma once

#include <string>

#include "json.hpp"
#include "riordan/commutator.hpp"
#include "riordan/riordan.hpp"
#include "riordan/series.hpp"

namespace riordan {

// Series travel as {"trunc_order": N, "coeffs": ["p/q", ...]} with exact
// rational strings, never floating point. Malformed input throws
// InvalidDocument.
nlohmann::json series_doc(const Series& s);
Series series_from_doc(const nlohmann::json& doc);

// {"d": <series>, "h": <series>}
nlohmann::json pair_doc(const RiordanPair& p);
RiordanPair pair_from_doc(const nlohmann::json& doc);

// {"target": <pair>, "left": <pair>, "right": <pair>,
//  "verified_order": W, "identity_checked": true}
// Emitted documents always carry identity_checked = true; parsing re-runs the
// bracket check so a tampered document cannot round-trip.
nlohmann::json witness_doc(const CommutatorWitness& w);
CommutatorWitness witness_from_doc(const nlohmann::json& doc);

}  // namespace riordan
