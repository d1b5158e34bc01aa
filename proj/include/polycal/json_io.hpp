#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "polycal/funcs.hpp"
#include "polycal/hpoly.hpp"
#include "polycal/svmap.hpp"

#include "json.hpp"

namespace polycal::io {

using Json = nlohmann::json;

struct InstanceDoc;

/// "check" document: a theorem id with instances, points, and parameters.
struct CheckDoc {
    std::string theorem;
    std::vector<InstanceDoc> instances;
    std::vector<RatVec> points;
    std::map<std::string, std::string> params; // values are rational/integer literals
};

/// Parsed instance file: one of the four document types.
struct InstanceDoc {
    std::variant<HPoly, MaxAffineFn, SVMap, CheckDoc> payload;
};

/// Strict parse: rejects unknown fields, malformed rationals ("1/0"), and
/// inconsistent dimensions. Syntax errors carry line/column.
InstanceDoc parse_instance(const std::string& bytes);

/// Canonical bytes: sorted keys, compact separators, rationals normalized
/// ("2/4" -> "1/2"). parse ∘ serialize ∘ parse is the identity.
std::string serialize_instance(const InstanceDoc& doc);

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j, const std::string& field);
Json vec_to_json(const RatVec& v);
RatVec vec_from_json(const Json& j, const std::string& field);
Json hpoly_to_json(const HPoly& P);
HPoly hpoly_from_json(const Json& j);
Json maxaffine_to_json(const MaxAffineFn& f);
MaxAffineFn maxaffine_from_json(const Json& j);
Json svmap_to_json(const SVMap& F);
SVMap svmap_from_json(const Json& j);
Json cone_to_json(const ConeGen& C);

/// Parse "p/q,p2,..." (CLI --point arguments).
RatVec vec_from_csv(const std::string& csv);

/// FNV-1a 64-bit over canonical bytes, as 16 hex digits.
std::string digest(const std::string& bytes);

} // namespace polycal::io
