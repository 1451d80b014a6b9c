#include "braidfgl/braid/io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

#include "braidfgl/error.hpp"

namespace braidfgl::braid {

using nlohmann::json;

std::string format_text(const BraidWord& w) {
  std::ostringstream out;
  out << "n=" << w.strands() << '\n';
  bool first = true;
  for (int letter : w.letters()) {
    out << (first ? "" : " ") << letter;
    first = false;
  }
  out << '\n';
  return out.str();
}

namespace {

int parse_int(std::string_view token, std::string_view what) {
  int value = 0;
  const char* begin = token.data();
  const char* end = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || begin == end) {
    throw ParseError("malformed " + std::string(what) + " '" + std::string(token) + "'");
  }
  return value;
}

BraidWord checked_word(int strands, std::vector<int> letters) {
  try {
    return BraidWord(strands, std::move(letters));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

BraidWord parse_text(std::string_view text, std::optional<int> strands) {
  std::istringstream in{std::string(text)};
  std::string token;
  std::vector<int> letters;
  std::optional<int> header;
  bool first = true;
  while (in >> token) {
    if (first && token.rfind("n=", 0) == 0) {
      header = parse_int(std::string_view(token).substr(2), "strand count");
    } else {
      letters.push_back(parse_int(token, "braid letter"));
    }
    first = false;
  }
  if (header && strands && *header != *strands) {
    throw ParseError("header n=" + std::to_string(*header) + " disagrees with n=" +
                     std::to_string(*strands));
  }
  if (!header && !strands) throw ParseError("braid word needs a strand count (n=...)");
  return checked_word(header ? *header : *strands, std::move(letters));
}

json to_json(const BraidWord& w) {
  return {{"n", w.strands()}, {"word", std::vector<int>(w.letters().begin(), w.letters().end())}};
}

json to_json(const Permutation& p) { return std::vector<int>(p.images().begin(), p.images().end()); }

json to_json(const GarsideNormalForm& nf) {
  json factors = json::array();
  for (const auto& p : nf.factors) factors.push_back(to_json(p));
  return {{"n", nf.strands}, {"inf", nf.infimum}, {"factors", factors}};
}

json to_json(const ClosureSummary& c) {
  return {{"components", c.components}, {"exponent_sum", c.exponent_sum}, {"strands", c.strands}};
}

json to_json(const BraidCobordism& c) {
  return {{"intervals", c.intervals},
          {"permutation", to_json(c.permutation)},
          {"top", c.top},
          {"bottom", c.bottom}};
}

BraidWord word_from_json(const json& j) {
  try {
    return checked_word(j.at("n").get<int>(), j.at("word").get<std::vector<int>>());
  } catch (const json::exception& e) {
    throw ParseError(std::string("braid word JSON: ") + e.what());
  }
}

GarsideNormalForm normal_form_from_json(const json& j) {
  try {
    GarsideNormalForm nf;
    nf.strands = j.at("n").get<int>();
    nf.infimum = j.at("inf").get<int>();
    for (const auto& f : j.at("factors")) {
      auto images = f.get<std::vector<int>>();
      if (static_cast<int>(images.size()) != nf.strands) {
        throw ParseError("normal form factor has wrong degree");
      }
      nf.factors.emplace_back(std::move(images));
    }
    return nf;
  } catch (const json::exception& e) {
    throw ParseError(std::string("normal form JSON: ") + e.what());
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace braidfgl::braid
