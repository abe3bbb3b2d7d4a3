#pragma once

#include "json.hpp"
#include "k2forge/families/record.hpp"

namespace k2forge {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const Certificate& c);
/// Record with its certificates; rationals as "p/q" strings, polynomials
/// as text readable by parse_bipoly.
Json to_json(const CurveRecord& rec);

/// Rebuilds curve, points, elements, flags, overlays and facts. Stored
/// certificates are not read back; callers re-verify. Throws UsageError on
/// a malformed document or a schema mismatch.
CurveRecord record_from_json(const Json& j);

}  // namespace k2forge
