#pragma once

// JSON form of complexes:
//
//   {"vertices": [1, 2, 3], "facets": [[1, 2], [2, 3]]}
//   {"colors": 2, "vertices": ["1.1", "2.1"], "facets": [["1.1", "2.1"]]}
//
// Plain vertices are integers, colored vertices "i.j" strings. A listed
// vertex that lies in no facet is an isolated vertex.

#include <string>

#include <nlohmann/json.hpp>

#include "flagcx/colored.hpp"
#include "flagcx/complex.hpp"

namespace flagcx {

nlohmann::ordered_json to_json(const Complex& c);
nlohmann::ordered_json to_json(const ColoredComplex& cc);

/// Throws Error(parse) on malformed input, including facet vertices missing
/// from "vertices".
Complex complex_from_json(const nlohmann::ordered_json& j);
/// Requires a "colors" field.
ColoredComplex colored_from_json(const nlohmann::ordered_json& j);
/// True iff the document carries a "colors" field.
bool is_colored_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json read_json_file(const std::string& path);

}  // namespace flagcx
