#pragma once

#include <map>

#include <json.hpp>

#include "braidfgl/fgl/bud.hpp"
#include "braidfgl/fgl/lazard.hpp"

namespace braidfgl::fgl {

// {"terms": [{"mono": {"x": 1, "a1": 1}, "coef": "1"}, ...]} in canonical
// order. Bud and log series add "degree".
nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Bud& b);
Bud bud_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LogSeries& s);
LogSeries log_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BudDefects& d);
// {"stage", "law", "log", "generators", "correction"}
nlohmann::json to_json(const LazardState& s);
// {"classes": {"0": "1", "1": "-a1", ...}}
nlohmann::json to_json(const MishchenkoClasses& m);

// "a1=u, a2=0" or "v1=u"; values are polynomials. Throws ParseError.
std::map<int, Polynomial> parse_assignment(std::string_view text);
nlohmann::json to_json(const std::map<int, Polynomial>& assignment);

}  // namespace braidfgl::fgl
