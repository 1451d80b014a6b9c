#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braidfgl/rational.hpp"

namespace braidfgl::fgl {

// A polynomial variable. Three kinds share one id space:
//   formal variables x, y, z, t (ids 0..3), which carry the truncation
//   degree; Lazard generators a1, a2, ... of weight 1, 2, ...; and named
//   parameters (u, a, b, ...) that behave like weight-0 coefficients.
class Variable {
 public:
  static Variable x() { return Variable(0); }
  static Variable y() { return Variable(1); }
  static Variable z() { return Variable(2); }
  static Variable t() { return Variable(3); }
  // a_k, k >= 1.
  static Variable generator(int k);
  // Parses x/y/z/t, a<k> or v<k> (an alias of a<k>), or any other
  // identifier [A-Za-z_][A-Za-z0-9_]* as a parameter. Throws ParseError.
  static Variable named(std::string_view name);

  bool is_formal() const { return id_ < kGeneratorBase; }
  bool is_generator() const { return id_ >= kGeneratorBase && id_ < kParameterBase; }
  bool is_parameter() const { return id_ >= kParameterBase; }
  // k for a_k, 0 otherwise.
  int generator_index() const { return is_generator() ? static_cast<int>(id_ - kGeneratorBase) + 1 : 0; }
  int weight() const { return generator_index(); }
  std::string name() const;

  // Canonical order: x < y < z < t < a1 < a2 < ... < parameters by name.
  // (Printing puts "larger" variables, i.e. earlier in this list, first.)
  static bool canonical_less(Variable a, Variable b);

  std::uint32_t id() const { return id_; }
  friend auto operator<=>(const Variable&, const Variable&) = default;

 private:
  static constexpr std::uint32_t kGeneratorBase = 4;
  static constexpr std::uint32_t kParameterBase = 1u << 20;

  explicit Variable(std::uint32_t id) : id_(id) {}
  std::uint32_t id_ = 0;
};

// A product of variable powers, kept sorted by variable id.
class Monomial {
 public:
  Monomial() = default;
  static Monomial of(Variable v, unsigned exponent = 1);
  static Monomial of(std::initializer_list<std::pair<Variable, unsigned>> powers);

  bool is_one() const { return powers_.empty(); }
  unsigned exponent(Variable v) const;
  // Total degree in x, y, z, t.
  int formal_degree() const;
  // Sum of generator weights.
  int weight() const;
  const std::vector<std::pair<Variable, unsigned>>& powers() const { return powers_; }

  // Split into (formal part, coefficient part).
  std::pair<Monomial, Monomial> split_formal() const;
  Monomial without(Variable v) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<Variable, unsigned>> powers_;
};

// Sparse polynomial with exact rational coefficients.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(int constant) : Polynomial(Rational(constant)) {}  // NOLINT
  Polynomial(Variable v);  // NOLINT
  Polynomial(const Monomial& m, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient(Monomial()); }

  // Largest formal degree of a term; -1 for the zero polynomial.
  int formal_degree() const;
  // Smallest formal degree of a term; -1 for the zero polynomial.
  int formal_order() const;
  // Terms of formal degree <= max_degree.
  Polynomial truncated(int max_degree) const;
  // Terms of formal degree exactly `degree`.
  Polynomial homogeneous_part(int degree) const;
  // Coefficient of the formal monomial as a polynomial in the coefficient
  // variables (generators and parameters).
  Polynomial coefficient_of(const Monomial& formal) const;
  // Groups terms by their formal part.
  std::map<Monomial, Polynomial> by_formal_part() const;
  // Groups terms by their coefficient (non-formal) part.
  std::map<Monomial, Polynomial> by_coefficient_part() const;

  bool is_integral() const;
  std::set<Variable> variables() const;
  // Highest generator index present (0 if none).
  int max_generator() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  void add_term(const Monomial& m, const Rational& c);

 private:
  Terms terms_;
};

// Product with every term of formal degree > max_degree dropped.
Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, int max_degree);
// p^e truncated to formal degree max_degree.
Polynomial power_truncated(const Polynomial& p, unsigned e, int max_degree);

// Simultaneous substitution v -> image for every v in the map, truncating at
// formal degree max_degree. A negative bound means no truncation.
Polynomial substitute(const Polynomial& p, const std::map<Variable, Polynomial>& images,
                      int max_degree);

// Canonical text, e.g. "x + y + a1*x*y" or "t - 1/2*a1*t^2". Terms are
// sorted by formal degree, then total degree, then lexicographically with
// x > y > z > t > a1 > a2 > ... > parameters.
std::string to_string(const Polynomial& p);
// Accepts sums and products of rationals (p/q), variables, powers (^n) and
// parenthesised subexpressions. Throws ParseError.
Polynomial parse_polynomial(std::string_view text);

// Terms in canonical print order.
std::vector<std::pair<Monomial, Rational>> canonical_terms(const Polynomial& p);

}  // namespace braidfgl::fgl
