#pragma once

// JSON interchange. Rationals are always strings ("5/2", "3"); integers are
// JSON numbers when they fit in 64 bits and decimal strings otherwise. Readers
// accept both spellings and throw InvalidJson (or the relevant domain error)
// on malformed input.

#include "json.hpp"

#include "toric/circle_actions.hpp"
#include "toric/hirzebruch.hpp"
#include "toric/polygon.hpp"

namespace toric::json_io {

using Json = nlohmann::json;

Json to_json(const Rational& value);
Json to_json(const BigInt& value);
Json to_json(const IntVec2& v);
Json to_json(const RatVec2& v);
Json to_json(const IntMat2& m);
Json to_json(const UnimodularAffine& map);
/// {"vertices": [["0","0"], ...]}
Json to_json(const Polygon& polygon);
Json to_json(const DelzantReport& report);
/// {"a": "5/2", "b": "1", "m": 2}
Json to_json(const HirzebruchParams& params);
Json to_json(const QuadrilateralClass& result);
/// {"type": "s2xs2", "a": ..., "b": ...} or {"type": "blowup_cp2", "l": ..., "e": ...}
Json to_json(const ManifoldClass& manifold);
Json to_json(const LabeledGraph& graph);
Json to_json(const FixedPointData& data);
Json to_json(const BettiNumbers& betti);
Json to_json(const ExtendabilityReport& report);

Rational rational_from_json(const Json& j);
BigInt integer_from_json(const Json& j);
IntVec2 int_vec_from_json(const Json& j);
RatVec2 rat_vec_from_json(const Json& j);
IntMat2 int_mat_from_json(const Json& j);
UnimodularAffine affine_from_json(const Json& j);
Polygon polygon_from_json(const Json& j);
HirzebruchParams params_from_json(const Json& j);
ManifoldClass manifold_from_json(const Json& j);
LabeledGraph graph_from_json(const Json& j);
FixedPointData fixed_data_from_json(const Json& j);

/// Parses text into a Json document; throws InvalidJson.
Json parse(std::string_view text);

} // namespace toric::json_io
