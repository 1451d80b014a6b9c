#pragma once

#include <string_view>
#include <vector>

#include <json.hpp>

#include "braidfgl/kz/holonomy.hpp"
#include "braidfgl/kz/relations.hpp"
#include "braidfgl/kz/system.hpp"

namespace braidfgl::kz {

// {"n": 3, "dim": 2, "A": {"1,2": [["1/2","0"],["0","1/2"]], ...}}.
// Entries are "p/q" strings on output; integers are also accepted on input.
nlohmann::json to_json(const InfinitesimalSystem& sys);
InfinitesimalSystem system_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RelationReport& r);
nlohmann::json to_json(const HolonomyResult& r);

// {"re": f, "im": f}
nlohmann::json to_json(std::complex<double> z);
std::complex<double> complex_from_json(const nlohmann::json& j);

// [{"re": "0", "im": "0"}, ...]; re/im may be rational strings or numbers.
ConfigurationPoint configuration_point_from_json(const nlohmann::json& j);

// Either a list of n - 1 matrices or {"1": M, "2": M, ...} keyed by the
// adjacent transposition index.
std::vector<RationalMatrix> rho_from_json(const nlohmann::json& j, int points);

// Array of configurations, each an array of {"re", "im"} numbers.
std::vector<Configuration> polyline_from_json(const nlohmann::json& j);

// "circle:i,j,r", "offset:i,r", or "polyline:@file" (file holds the JSON
// accepted by polyline_from_json). Throws ParseError.
LoopPath parse_loop_spec(std::string_view spec, int points);

}  // namespace braidfgl::kz
