#pragma once

// JSON wire formats.  Big integers travel as decimal strings; field elements
// and small structural integers as JSON numbers.  Parsers throw ParseError on
// malformed input (and propagate validation errors from the constructors).

#include <string>
#include <vector>

#include "json.hpp"

#include "ffpoints/construct.hpp"
#include "ffpoints/curves.hpp"
#include "ffpoints/factored_expr.hpp"
#include "ffpoints/search.hpp"

namespace ffp {

using json = nlohmann::ordered_json;

// {"coeff": c, "t_exp": "...", "factors": [{"base": [c0..cd],
//  "inner": "...", "outer": "..."}]}
json fe_to_json(const FactoredExpr& a);
FactoredExpr fe_from_json(const PrimeField& F, const json& j);

// {"family": ..., "p": ..., "r"/"k"/("f","b") ..., "a": <factored-expr>}
json curve_to_json(const CurveModel& c);
CurveModel curve_from_json(const json& j);

// {"repr": "factored"|"dense", "x": ..., "y": ...}; dense coordinates are
// {"num": [c0..], "den": [c0..]}
json point_to_json(const CurvePoint& pt);
CurvePoint point_from_json(const CurveModel& curve, const json& j);

json point_set_to_json(const PointSetReport& rep);
PointSetReport point_set_from_json(const json& j);

json verification_to_json(const VerificationResult& r);

json table_to_json(const std::vector<TableRow>& rows);

json search_report_summary_json(const SearchReport& rep);

// File helpers (ParseError on unreadable/invalid input).
json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace ffp
