#include "braidfgl/fgl/bud.hpp"

#include "braidfgl/error.hpp"

namespace braidfgl::fgl {

namespace {

const Polynomial kX{Variable::x()};
const Polynomial kY{Variable::y()};
const Polynomial kZ{Variable::z()};
const Polynomial kT{Variable::t()};

void require_law_variables(const Polynomial& p, const char* what) {
  for (auto v : p.variables()) {
    if (v == Variable::z() || v == Variable::t()) {
      throw DomainError(std::string(what) + " may only use x and y as formal variables");
    }
  }
}

std::string describe(const BudDefects& d) {
  std::string out;
  auto add = [&](const char* name, const Polynomial& p) {
    if (p.is_zero()) return;
    if (!out.empty()) out += "; ";
    out += std::string(name) + " defect " + to_string(p);
  };
  add("associativity", d.associativity);
  add("commutativity", d.commutativity);
  add("unit", d.unit);
  return out;
}

}  // namespace

Bud Bud::make(Polynomial law, int degree) {
  if (degree < 1) throw DomainError("bud degree must be at least 1");
  require_law_variables(law, "a bud");
  return Bud{degree, law.truncated(degree)};
}

Polynomial compose(const Polynomial& law, const Polynomial& a, const Polynomial& b, int m) {
  return substitute(law, {{Variable::x(), a}, {Variable::y(), b}}, m);
}

BudDefects bud_defects(const Polynomial& law, int m) {
  require_law_variables(law, "a law");
  BudDefects d;
  auto left = compose(law, compose(law, kX, kY, m), kZ, m);
  auto right = compose(law, kX, compose(law, kY, kZ, m), m);
  d.associativity = (left - right).truncated(m);
  d.commutativity = (law - compose(law, kY, kX, m)).truncated(m);
  d.unit = (compose(law, kX, Polynomial(), m) - kX + compose(law, Polynomial(), kY, m) - kY).truncated(m);
  return d;
}

Integer cocycle_divisor(int n) {
  if (n < 2) throw DomainError("cocycle index must be at least 2");
  Integer g = 0;
  Integer binom;
  for (int k = 1; k < n; ++k) {
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), binom.get_mpz_t());
  }
  return g;
}

Polynomial sym_cocycle(int n) {
  Integer d = cocycle_divisor(n);
  Polynomial c;
  Integer binom;
  for (int k = 1; k < n; ++k) {
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    auto m = Monomial::of({{Variable::x(), static_cast<unsigned>(k)}, {Variable::y(), static_cast<unsigned>(n - k)}});
    c.add_term(m, Rational(binom / d));
  }
  return c;
}

Polynomial coboundary(const Polynomial& h) {
  require_law_variables(h, "a cochain");
  return compose(h, kX, kY, -1) + compose(h, kX + kY, kZ, -1) - compose(h, kY, kZ, -1) -
         compose(h, kX, kY + kZ, -1);
}

bool weight_homogeneous(const Polynomial& law) {
  for (auto& [formal, coef] : law.by_formal_part()) {
    int target = formal.formal_degree() - 1;
    for (auto& [m, c] : coef.terms()) {
      if (m.weight() != target) return false;
    }
  }
  return true;
}

// ---- logarithms ----

Polynomial LogSeries::coefficient(int k) const {
  return series.coefficient_of(Monomial::of(Variable::t(), static_cast<unsigned>(k + 1)));
}

Polynomial LogSeries::apply(const Polynomial& arg, int m) const {
  return substitute(series, {{Variable::t(), arg}}, m);
}

LogSeries log_of_bud(const Bud& f) {
  auto defects = bud_defects(f.law, f.degree);
  if (!defects.zero()) {
    throw DomainError("not a " + std::to_string(f.degree) + "-bud: " + describe(defects));
  }
  const int m = f.degree;
  // (dF/dx)(0, t): terms linear in x, with x dropped and y renamed to t.
  Polynomial derivative;
  for (auto& [mono, c] : f.law.terms()) {
    if (mono.exponent(Variable::x()) != 1) continue;
    auto rest = mono.without(Variable::x());
    unsigned ey = rest.exponent(Variable::y());
    derivative.add_term(rest.without(Variable::y()) * Monomial::of(Variable::t(), ey), c);
  }
  // 1 / (1 + w) = sum (-w)^k; w has no constant term so m terms suffice.
  Polynomial w = derivative - Polynomial(1);
  Polynomial inverse(1);
  Polynomial power(1);
  for (int k = 1; k < m; ++k) {
    power = multiply_truncated(power, -w, m - 1);
    inverse += power;
  }
  LogSeries phi{m, {}};
  for (auto& [mono, c] : inverse.terms()) {
    unsigned et = mono.exponent(Variable::t());
    phi.series.add_term(mono.without(Variable::t()) * Monomial::of(Variable::t(), et + 1),
                        c / Rational(et + 1));
  }
  return phi;
}

LogSeries reversion(const LogSeries& phi) {
  const int m = phi.degree;
  if (!phi.series.coefficient_of(Monomial()).is_zero() ||
      phi.series.coefficient_of(Monomial::of(Variable::t())) != Polynomial(1)) {
    throw DomainError("logarithm must be t plus higher-order terms");
  }
  for (auto v : phi.series.variables()) {
    if (v.is_formal() && v != Variable::t()) throw DomainError("logarithm must be a series in t");
  }
  // psi = t - N(psi) where phi = t + N; each pass fixes one more degree.
  Polynomial nonlinear = phi.series - kT;
  Polynomial psi = kT;
  for (int pass = 1; pass < m; ++pass) {
    psi = kT - substitute(nonlinear, {{Variable::t(), psi}}, m);
  }
  return LogSeries{m, psi};
}

Bud fgl_from_log(const LogSeries& phi, int m) {
  if (m < 1 || m > phi.degree) throw DomainError("requested degree exceeds the logarithm's degree");
  LogSeries trunc{m, phi.series.truncated(m)};
  auto psi = reversion(trunc);
  auto sum = trunc.apply(kX, m) + trunc.apply(kY, m);
  return Bud::make(psi.apply(sum, m), m);
}

Polynomial quillen_c1_tensor(const Bud& f, const Polynomial& a, const Polynomial& b, int m) {
  if (a.constant_term() != 0 || b.constant_term() != 0) {
    throw DomainError("Chern class arguments must have zero constant term");
  }
  if (m < 1 || m > f.degree) throw DomainError("truncation degree must lie in [1, bud degree]");
  return compose(f.law.truncated(m), a, b, m);
}

Bud specialize(const Bud& f, const std::map<int, Polynomial>& assignment) {
  std::map<Variable, Polynomial> images;
  for (auto v : f.law.variables()) {
    if (!v.is_generator()) continue;
    auto it = assignment.find(v.generator_index());
    if (it == assignment.end()) throw DomainError("no value assigned to " + v.name());
    for (auto w : it->second.variables()) {
      if (w.is_formal()) throw DomainError("value of " + v.name() + " involves " + w.name());
    }
    images.emplace(v, it->second);
  }
  return Bud::make(substitute(f.law, images, f.degree), f.degree);
}

}  // namespace braidfgl::fgl
