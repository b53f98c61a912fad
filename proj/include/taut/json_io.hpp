#pragma once

#include <string>

#include "taut/tautbuild.hpp"

namespace taut {

/// { "vars": [...], "terms": [{"x": [...], "d": [...], "c": "p/q"}, ...] }
/// with terms sorted descending under the given order. Returns a compact
/// JSON string with sorted object keys.
std::string operator_to_json(const WeylElement& op, const TermOrder& ord = TermOrder::grevlex());

WeylElement operator_from_json(const std::string& text);

/// TautSpec schema:
/// { "vars": [...],
///   "rep": { "labels": [...], "matrices": [[["p/q",...],...],...],
///            "brackets": { "a,b": {"label": "p/q", ...}, ... }, "e": label },
///   "ideal": ["poly", ...],
///   "beta": { label: "p/q", ... } }
TautSpec tautspec_from_json(const std::string& text);
std::string tautspec_to_json(const TautSpec& spec);

}  // namespace taut
