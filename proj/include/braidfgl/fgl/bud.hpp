#pragma once

#include <map>

#include "braidfgl/fgl/polynomial.hpp"

namespace braidfgl::fgl {

// A law F(x, y) known modulo formal degree degree+1; the stored polynomial
// is always truncated to formal degree <= degree.
struct Bud {
  int degree = 1;
  Polynomial law;

  // Truncates and checks that only x, y and coefficient variables occur.
  static Bud make(Polynomial law, int degree);
  friend bool operator==(const Bud&, const Bud&) = default;
};

struct BudDefects {
  Polynomial associativity;  // F(F(x,y),z) - F(x,F(y,z))
  Polynomial commutativity;  // F(x,y) - F(y,x)
  Polynomial unit;           // F(x,0) - x + F(0,y) - y

  bool zero() const { return associativity.is_zero() && commutativity.is_zero() && unit.is_zero(); }
};

// Defects with every term of formal degree > m dropped. All three vanish
// exactly when F is an m-bud.
BudDefects bud_defects(const Polynomial& law, int m);

// Composition F(a, b) of a law in x, y, truncated at formal degree m.
Polynomial compose(const Polynomial& law, const Polynomial& a, const Polynomial& b, int m);

// gcd of C(n, k), 0 < k < n. n >= 2.
Integer cocycle_divisor(int n);
// ((x+y)^n - x^n - y^n) / d_n.
Polynomial sym_cocycle(int n);
// H(x,y) + H(x+y,z) - H(y,z) - H(x,y+z); zero on cocycles.
Polynomial coboundary(const Polynomial& h);

// True if the coefficient of every x^i y^j is a polynomial in the generators
// of pure weight i + j - 1.
bool weight_homogeneous(const Polynomial& law);

// phi(t) = t + sum m_k t^(k+1), known to formal degree `degree`.
struct LogSeries {
  int degree = 1;
  Polynomial series;

  // m_k, the coefficient of t^(k+1).
  Polynomial coefficient(int k) const;
  // phi with t replaced by `arg`, truncated at formal degree m.
  Polynomial apply(const Polynomial& arg, int m) const;
  friend bool operator==(const LogSeries&, const LogSeries&) = default;
};

// Integral of 1 / (dF/dx)(0, t), truncated to degree F.degree. Throws
// DomainError if F is not a bud of its degree.
LogSeries log_of_bud(const Bud& f);
// Compositional inverse of phi to the same degree.
LogSeries reversion(const LogSeries& phi);
// phi^-1(phi(x) + phi(y)) truncated at formal degree m (m <= phi.degree).
Bud fgl_from_log(const LogSeries& phi, int m);
inline Bud fgl_from_log(const LogSeries& phi) { return fgl_from_log(phi, phi.degree); }

// F(a, b) = sum over i + j <= m of c_ij a^i b^j, then truncated at formal
// degree m. Throws DomainError when a or b has a nonzero constant term or
// m exceeds the bud's degree.
Polynomial quillen_c1_tensor(const Bud& f, const Polynomial& a, const Polynomial& b, int m);
inline Polynomial quillen_c1_tensor(const Bud& f, const Polynomial& a, const Polynomial& b) {
  return quillen_c1_tensor(f, a, b, f.degree);
}

// Replaces generator a_k by assignment.at(k). Throws DomainError if some
// generator of F is not assigned or a value involves x, y, z or t.
Bud specialize(const Bud& f, const std::map<int, Polynomial>& assignment);

}  // namespace braidfgl::fgl
