#pragma once

// Text and JSON forms of the library's values.
//
// Text tableaux list rows bottom to top, one row per line, entries separated
// by spaces, inner cells written as ".". JSON tableaux are
// {"inner": [...], "rows": [[...], ...]} with 0 in inner cells.

#include <string>
#include <string_view>

#include <json.hpp>

#include "nclr/composition_tableau.hpp"
#include "nclr/lr.hpp"
#include "nclr/young_tableau.hpp"

namespace nclr {

using json = nlohmann::json;

std::string to_text(const Grid& grid, const std::vector<int>& inner);
std::string to_text(const SkewTableau& t);
std::string to_text(const CompositionTableau& t);

// Parsers throw parse_error on malformed text and precondition_error when
// the filling is not a tableau.
SkewTableau skew_tableau_from_text(std::string_view text);
CompositionTableau composition_tableau_from_text(std::string_view text);

json to_json(const SkewTableau& t);
json to_json(const CompositionTableau& t);
json shape_json(const std::vector<int>& outer, const std::vector<int>& inner);
json to_json(const CoefficientTable& table);
// Frank words as arrays of column words.
json frank_to_json(std::span<const int> w);

SkewTableau skew_tableau_from_json(const json& j);
CompositionTableau composition_tableau_from_json(const json& j);
CoefficientTable coefficient_table_from_json(const json& j);
Word frank_from_json(const json& j);

}  // namespace nclr
