#include "braidfgl/rational.hpp"

#include <cctype>

#include "braidfgl/error.hpp"

namespace braidfgl {

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  auto num = s.substr(0, slash);
  if (!is_integer_literal(num)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Rational(parse_integer(num));
  auto den = s.substr(slash + 1);
  if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  Integer d = parse_integer(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(parse_integer(num), d);
  r.canonicalize();
  return r;
}

}  // namespace braidfgl
