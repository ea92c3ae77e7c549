#pragma once

#include "json.hpp"
#include "quintic/curve_points.hpp"

namespace quintic {

using Json = nlohmann::ordered_json;

Json factorization_to_json(const Factorization& f);
Factorization factorization_from_json(const Json& j);

Json point_to_json(const RationalPoint& pt);
RationalPoint point_from_json(const Json& j, const BigInt& A);

/// Structured search report, schema "quintic.search-report/1".  Parsing
/// re-validates every point against the curve equation, so
/// parse(render(report)) == report is an exact round trip.
Json search_report_to_json(const SearchReport& report);
SearchReport search_report_from_json(const Json& j);

}  // namespace quintic
