#include "braidfgl/fgl/lazard.hpp"

#include <sstream>

#include "braidfgl/error.hpp"
#include "braidfgl/fgl/hnf.hpp"

namespace braidfgl::fgl {

namespace {

Monomial xy(unsigned i, unsigned j) {
  return Monomial::of({{Variable::x(), i}, {Variable::y(), j}});
}

// Symmetric homogeneous degree-n polynomials vanishing on the axes:
// x^i y^(n-i) + x^(n-i) y^i for 1 <= i <= n/2.
std::vector<Polynomial> symmetric_basis(int n) {
  std::vector<Polynomial> basis;
  for (int i = 1; 2 * i <= n; ++i) {
    auto a = static_cast<unsigned>(i);
    auto b = static_cast<unsigned>(n - i);
    Polynomial p(xy(a, b));
    if (a != b) p += Polynomial(xy(b, a));
    basis.push_back(std::move(p));
  }
  return basis;
}

std::vector<Monomial> monomials_xyz(int n) {
  std::vector<Monomial> out;
  for (int a = n; a >= 0; --a) {
    for (int b = n - a; b >= 0; --b) {
      out.push_back(Monomial::of({{Variable::x(), static_cast<unsigned>(a)},
                                  {Variable::y(), static_cast<unsigned>(b)},
                                  {Variable::z(), static_cast<unsigned>(n - a - b)}}));
    }
  }
  return out;
}

Integer as_integer(const Rational& r, const char* what) {
  if (!is_integral(r)) throw InternalError(std::string(what) + " has a non-integral coefficient");
  return r.get_num();
}

IntegerVector negated(IntegerVector v) {
  for (auto& e : v) e = -e;
  return v;
}

std::string describe_system(const IntegerMatrix& a, const IntegerVector& b) {
  std::ostringstream os;
  for (std::size_t r = 0; r < a.size(); ++r) {
    os << "[";
    for (std::size_t c = 0; c < a[r].size(); ++c) os << (c ? " " : "") << a[r][c];
    os << " | " << b[r] << "]\n";
  }
  return os.str();
}

}  // namespace

LazardState initial_state() {
  LazardState s;
  s.stage = 0;
  s.law = Bud::make(Polynomial(Variable::x()) + Polynomial(Variable::y()), 1);
  s.log = LogSeries{1, Polynomial(Variable::t())};
  return s;
}

LazardState extend_bud(const LazardState& state) {
  const int q = state.stage;
  const int n = q + 2;
  const auto& f = state.law.law;
  const Polynomial x(Variable::x()), y(Variable::y()), z(Variable::z());

  auto defect = compose(f, compose(f, x, y, n), z, n) - compose(f, x, compose(f, y, z, n), n);
  if (!defect.truncated(n - 1).is_zero()) {
    throw InternalError("stage " + std::to_string(q) + " law is not a " + std::to_string(q + 1) + "-bud");
  }

  // Coboundary matrix on the symmetric basis, rows indexed by x^a y^b z^c.
  auto basis = symmetric_basis(n);
  auto rows = monomials_xyz(n);
  IntegerMatrix a(rows.size(), IntegerVector(basis.size()));
  for (std::size_t c = 0; c < basis.size(); ++c) {
    auto image = coboundary(basis[c]);
    for (std::size_t r = 0; r < rows.size(); ++r) a[r][c] = as_integer(image.coefficient(rows[r]), "coboundary");
  }

  // The integer kernel must be spanned by C_n itself.
  auto cocycle = sym_cocycle(n);
  IntegerVector cocycle_coords(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto e = static_cast<unsigned>(i + 1);
    cocycle_coords[i] = as_integer(cocycle.coefficient(xy(e, static_cast<unsigned>(n) - e)), "cocycle");
  }
  auto kernel = integer_kernel(a, basis.size());
  if (kernel.size() != 1 || (kernel[0] != cocycle_coords && kernel[0] != negated(cocycle_coords))) {
    throw InternalError("unexpected symmetric cocycle space in degree " + std::to_string(n));
  }
  const Integer& c = cocycle_coords[0];

  Polynomial correction;
  for (auto& [mu, part] : defect.homogeneous_part(n).by_coefficient_part()) {
    IntegerVector rhs(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) rhs[r] = -as_integer(part.coefficient(rows[r]), "defect");
    auto h = solve_integer(a, basis.size(), rhs);
    if (!h) {
      throw InternalError("no integral correction in degree " + std::to_string(n) + " for coefficient " +
                          to_string(Polynomial(mu)) + "; system [A | b]:\n" + describe_system(a, rhs));
    }
    Integer k;
    mpz_fdiv_q(k.get_mpz_t(), (*h)[0].get_mpz_t(), c.get_mpz_t());
    Polynomial piece;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      piece += basis[i] * Rational((*h)[i] - k * cocycle_coords[i]);
    }
    correction += Polynomial(mu) * piece;
  }

  LazardState next;
  next.stage = q + 1;
  next.generators = state.generators;
  next.generators.push_back(Variable::generator(q + 1));
  next.correction = correction;
  next.law = Bud::make(f + correction + Polynomial(next.generators.back()) * cocycle, n);
  next.log = log_of_bud(next.law);
  return next;
}

LazardState universal_bud(int q, int max_stages) {
  if (q < 1) throw DomainError("stage must be at least 1");
  if (q > max_stages) {
    throw LimitError("stage " + std::to_string(q) + " exceeds the limit of " + std::to_string(max_stages));
  }
  auto state = initial_state();
  while (state.stage < q) state = extend_bud(state);
  return state;
}

LogSeries MishchenkoClasses::logarithm() const {
  LogSeries g{static_cast<int>(classes.size()), {}};
  for (std::size_t k = 0; k < classes.size(); ++k) {
    auto tk = Polynomial(Monomial::of(Variable::t(), static_cast<unsigned>(k + 1)));
    g.series += classes[k] * tk * Rational(1, static_cast<unsigned long>(k + 1));
  }
  return g;
}

MishchenkoClasses mishchenko_classes(const LazardState& state) {
  MishchenkoClasses out;
  for (int k = 0; k <= state.stage; ++k) out.classes.push_back(state.log.coefficient(k) * Rational(k + 1));
  return out;
}

std::map<int, Polynomial> classifying_assignment(const LazardState& state, const Bud& target) {
  const int q = state.stage;
  if (target.degree < q + 1) throw DomainError("target bud has too small a degree");
  if (target.law.max_generator() != 0) throw DomainError("target law must not involve generators");
  auto defects = bud_defects(target.law, q + 1);
  if (!defects.zero()) throw DomainError("target is not a " + std::to_string(q + 1) + "-bud");

  std::map<int, Polynomial> assignment;
  for (int k = 1; k <= q; ++k) {
    auto g = Variable::generator(k);
    auto mono = xy(1, static_cast<unsigned>(k));
    auto coef = state.law.law.coefficient_of(mono);
    // Weight k forces coef = c * a_k + (terms in a_1..a_{k-1}).
    Rational lead = coef.coefficient(Monomial::of(g));
    if (lead == 0) throw InternalError("generator " + g.name() + " missing from its coefficient");
    auto rest = coef - Polynomial(Monomial::of(g), lead);
    std::map<Variable, Polynomial> images;
    for (auto& [i, v] : assignment) images.emplace(Variable::generator(i), v);
    auto rest_value = substitute(rest, images, -1);
    assignment[k] = (target.law.coefficient_of(mono) - rest_value) * (Rational(1) / lead);
  }
  auto image = specialize(state.law, assignment);
  if (image.law != target.law.truncated(q + 1)) {
    throw InternalError("classifying map does not reproduce the target law");
  }
  return assignment;
}

}  // namespace braidfgl::fgl
