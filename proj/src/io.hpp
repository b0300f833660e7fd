#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "weylscope/weylscope.hpp"

namespace weylscope::io {

using nlohmann::json;

// A JSON document with its source text, so schema errors can point at a line.
struct Document {
    std::string source;  // file name for diagnostics
    std::string text;
    json value;

    // Line of the value at a JSON pointer, or 0 if it cannot be located.
    int line_of(const json::json_pointer& ptr) const;
    [[noreturn]] void fail(const json::json_pointer& ptr, const std::string& what) const;
};

Document load_document(const std::string& path);
Document parse_document(std::string text, std::string source = "<input>");

std::int64_t get_int(const Document& doc, const json::json_pointer& ptr);
Rational get_rational(const Document& doc, const json::json_pointer& ptr);
ExtendedValue get_extended(const Document& doc, const json::json_pointer& ptr);
Vec get_vec(const Document& doc, const json::json_pointer& ptr, int n);

// "1,-2/3,0" → vector; "-inf" entries allowed only by parse_extended_list.
Vec parse_vec(const std::string& s, int n);
std::vector<ExtendedValue> parse_extended_list(const std::string& s);

// Datum file: {"name": optional, "rank": n, "cartan": [[...], ...]}.
DatumPtr datum_from_json(const Document& doc);
DatumPtr load_datum(const std::string& name, const std::string& file);

// "a1,a3", "none", "delta" (Δ − {α_rank}), "all".
TypeLabel parse_type(const std::string& s, const RootDatum& d);

json to_json(const Rational& q);
json to_json(const ExtendedValue& v);
json to_json(const Vec& v);
json to_json(const IVec& v);
json roots_json(const RootDatum& d, const RootSet& s);
json to_json(const Cone& c);
Cone cone_from_json(const Document& doc, const json::json_pointer& ptr, int n);
json parabolic_json(const ParabolicSet& p);
json to_json(const LabeledPrefan& f);
json to_json(const CompactApartmentPoint& x);
json to_json(const StabilizerProfile& p);
json to_json(const RelevanceReport& r);
json to_json(const TropicalPolynomial& f);
json to_json(const DiagSeminorm& s);

// Point file: {"stratum": parabolic-id, "residual": [...]} or {"interior": [...]}.
CompactApartmentPoint point_from_json(const Document& doc, const ApartmentContext& ctx);
// [{"exponents": {"root-index": n, ...}, "log_coeff": "p/q" | "-inf", "character": [...]?}, ...]
TropicalPolynomial poly_from_json(const Document& doc, const RootDatum& d);
// {"values": ["0", "-1", "-inf", ...]}
DiagSeminorm seminorm_from_json(const Document& doc);

}  // namespace weylscope::io
