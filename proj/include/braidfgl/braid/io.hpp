#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "braidfgl/braid/braid_word.hpp"
#include "braidfgl/braid/garside.hpp"
#include "braidfgl/braid/markov.hpp"

namespace braidfgl::braid {

// Text form: a header line "n=<strands>" followed by one line of
// space-separated signed generator indices, e.g. "n=3\n1 2 -1\n".
// format_text(parse_text(s)) == s for every canonical s.
std::string format_text(const BraidWord& w);

// Accepts the canonical form with arbitrary whitespace. The header may be
// omitted when `strands` is given; if both are present they must agree.
// Throws ParseError.
BraidWord parse_text(std::string_view text, std::optional<int> strands = std::nullopt);

nlohmann::json to_json(const BraidWord& w);
nlohmann::json to_json(const GarsideNormalForm& nf);
nlohmann::json to_json(const Permutation& p);
nlohmann::json to_json(const ClosureSummary& c);
nlohmann::json to_json(const BraidCobordism& c);

BraidWord word_from_json(const nlohmann::json& j);
GarsideNormalForm normal_form_from_json(const nlohmann::json& j);

}  // namespace braidfgl::braid
