#include "braidfgl/fgl/io.hpp"

#include "braidfgl/error.hpp"

namespace braidfgl::fgl {

using nlohmann::json;

namespace {

Rational coefficient_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("coefficient must be a \"p/q\" string or an integer");
}

int degree_from_json(const json& j) {
  if (!j.is_object() || !j.contains("degree") || !j["degree"].is_number_integer()) {
    throw ParseError("missing integer \"degree\"");
  }
  return j["degree"].get<int>();
}

}  // namespace

json to_json(const Polynomial& p) {
  json terms = json::array();
  for (auto& [m, c] : canonical_terms(p)) {
    json mono = json::object();
    for (auto& [v, e] : m.powers()) mono[v.name()] = e;
    terms.push_back({{"mono", mono}, {"coef", to_string(c)}});
  }
  return {{"terms", terms}};
}

Polynomial polynomial_from_json(const json& j) {
  if (j.is_string()) return parse_polynomial(j.get<std::string>());
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw ParseError("polynomial JSON needs a \"terms\" array");
  }
  Polynomial p;
  for (auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("mono") || !t.contains("coef") || !t["mono"].is_object()) {
      throw ParseError("each term needs \"mono\" and \"coef\"");
    }
    Monomial m;
    for (auto& [name, e] : t["mono"].items()) {
      if (!e.is_number_unsigned()) throw ParseError("exponent of " + name + " must be a non-negative integer");
      m = m * Monomial::of(Variable::named(name), e.get<unsigned>());
    }
    p.add_term(m, coefficient_from_json(t["coef"]));
  }
  return p;
}

json to_json(const Bud& b) {
  json j = to_json(b.law);
  j["degree"] = b.degree;
  return j;
}

Bud bud_from_json(const json& j) { return Bud::make(polynomial_from_json(j), degree_from_json(j)); }

json to_json(const LogSeries& s) {
  json j = to_json(s.series);
  j["degree"] = s.degree;
  return j;
}

LogSeries log_from_json(const json& j) {
  return LogSeries{degree_from_json(j), polynomial_from_json(j).truncated(degree_from_json(j))};
}

json to_json(const BudDefects& d) {
  return {{"zero", d.zero()},
          {"associativity", to_string(d.associativity)},
          {"commutativity", to_string(d.commutativity)},
          {"unit", to_string(d.unit)}};
}

json to_json(const LazardState& s) {
  json gens = json::array();
  for (auto g : s.generators) gens.push_back(g.name());
  return {{"stage", s.stage},
          {"law", to_json(s.law)},
          {"log", to_json(s.log)},
          {"generators", gens},
          {"correction", to_json(s.correction)}};
}

json to_json(const MishchenkoClasses& m) {
  json classes = json::object();
  for (std::size_t k = 0; k < m.classes.size(); ++k) classes[std::to_string(k)] = to_string(m.classes[k]);
  return {{"classes", classes}};
}

std::map<int, Polynomial> parse_assignment(std::string_view text) {
  std::map<int, Polynomial> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw ParseError("assignment item '" + std::string(item) + "' lacks '='");
    auto name = item.substr(0, eq);
    while (!name.empty() && name.front() == ' ') name.remove_prefix(1);
    while (!name.empty() && name.back() == ' ') name.remove_suffix(1);
    auto v = Variable::named(name);
    if (!v.is_generator()) throw ParseError("'" + std::string(name) + "' is not a generator");
    if (!out.emplace(v.generator_index(), parse_polynomial(item.substr(eq + 1))).second) {
      throw ParseError(v.name() + " assigned twice");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

json to_json(const std::map<int, Polynomial>& assignment) {
  json j = json::object();
  for (auto& [k, v] : assignment) j["a" + std::to_string(k)] = to_string(v);
  return j;
}

}  // namespace braidfgl::fgl
