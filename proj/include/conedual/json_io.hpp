#pragma once

#include "conedual/direct_sum.hpp"

#include <nlohmann/json.hpp>

namespace conedual {

using nlohmann::json;

/// Rationals travel as strings "p" or "p/q"; integral JSON numbers are also
/// accepted on input. +infinity is the string "inf".
json rational_to_json(const Rational& q);
Rational rational_from_json(const json& j);
json extended_to_json(const std::optional<Rational>& q);

json vector_to_json(const RatVector& v);
RatVector vector_from_json(const json& j);

/// {"dim": d, "h": [[a..., b]], "v": {"vertices": [...], "rays": [...]}}.
/// Input needs "dim" and at least one of "h"/"v" ("h" wins when both are
/// present); output always carries both canonical representations.
json polyhedron_to_json(const Polyhedron& p);
Polyhedron polyhedron_from_json(const json& j);

/// {"dim": d, "C": ..., "D": ..., "B1": ..., "B2": ...}.
json quadruple_to_json(const Quadruple& q);
Quadruple quadruple_from_json(const json& j);

/// {"d": d, "m": m, "p": 1 | "inf", "base_ball": ..., "cones": [...]}.
json instance_to_json(const DirectSumInstance& inst);
DirectSumInstance instance_from_json(const json& j);

Property property_from_string(const std::string& s);
std::string property_to_string(Property prop);

/// Deterministic serialization (sorted keys, no whitespace variance).
std::string dump_canonical(const json& j);

}  // namespace conedual
