#include <doctest.h>

#include <numeric>
#include <random>

#include "braidfgl/error.hpp"
#include "braidfgl/fgl/bud.hpp"
#include "braidfgl/fgl/hnf.hpp"
#include "braidfgl/fgl/io.hpp"
#include "braidfgl/fgl/lazard.hpp"
#include "fgl_oracles.hpp"

using namespace braidfgl;
using namespace braidfgl::fgl;

namespace {

Polynomial P(const char* text) { return parse_polynomial(text); }

const Polynomial kX{Variable::x()};
const Polynomial kY{Variable::y()};

std::map<Variable, oracle::u64> random_values(const Polynomial& p, std::mt19937_64& rng) {
  std::map<Variable, oracle::u64> values;
  for (auto v : p.variables()) {
    if (!v.is_formal()) values[v] = rng() % oracle::kPrime;
  }
  return values;
}

// Pascal's triangle, independent of the library's binomial calls.
std::vector<std::vector<Integer>> pascal(int n) {
  std::vector<std::vector<Integer>> rows{{1}};
  for (int k = 1; k <= n; ++k) {
    std::vector<Integer> row(static_cast<std::size_t>(k + 1), 1);
    for (int i = 1; i < k; ++i) row[i] = rows.back()[i - 1] + rows.back()[i];
    rows.push_back(row);
  }
  return rows;
}

// p if n = p^k for a prime p, else 1.
int prime_power_base(int n) {
  for (int p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    int r = n;
    while (r % p == 0) r /= p;
    return r == 1 ? p : 1;
  }
  return 1;
}

Integer lcm_upto(int n) {
  Integer l = 1;
  for (int k = 2; k <= n; ++k) mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(k));
  return l;
}

Rational frac(long num, unsigned long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Polynomial random_rational_poly(std::mt19937_64& rng, const std::vector<Variable>& vars, int terms) {
  Polynomial p;
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    for (auto v : vars) m = m * Monomial::of(v, static_cast<unsigned>(rng() % 3));
    long num = static_cast<long>(rng() % 11) - 5;
    unsigned long den = rng() % 4 + 1;
    p.add_term(m, frac(num, den));
  }
  return p;
}

}  // namespace

TEST_CASE("polynomial text round trip and canonical order") {
  CHECK(to_string(P("y + x + x*y*a1")) == "x + y + a1*x*y");
  CHECK(to_string(P("t - 1/2*a1*t^2")) == "t - 1/2*a1*t^2");
  CHECK(to_string(P("(x + y)^2")) == "x^2 + 2*x*y + y^2");
  CHECK(to_string(P("0")) == "0");
  CHECK(to_string(P("-x + 3/6")) == "1/2 - x");
  CHECK(to_string(P("v2*x")) == "a2*x");
  CHECK(to_string(P("a1^2*x*y + a2*x*y")) == "a2*x*y + a1^2*x*y");
  CHECK(to_string(P("u*a*b + b + a")) == "a + b + a*b*u");
  CHECK(to_string(P("u*x - u*x")) == "0");
  CHECK(P("2*(x - 1/2)") == P("2*x - 1"));

  std::mt19937_64 rng(11);
  std::vector<Variable> vars{Variable::x(), Variable::y(), Variable::generator(1), Variable::named("u")};
  for (int i = 0; i < 100; ++i) {
    auto p = random_rational_poly(rng, vars, 6);
    CAPTURE(to_string(p));
    CHECK(parse_polynomial(to_string(p)) == p);
    CHECK(polynomial_from_json(to_json(p)) == p);
  }
}

TEST_CASE("polynomial parse errors") {
  for (const char* bad : {"", "x +", "x ** y", "(x", "x)", "1/0", "x^", "3 $", "a0", "x^99999"}) {
    CHECK_THROWS_AS(parse_polynomial(bad), ParseError);
  }
}

TEST_CASE("truncated arithmetic") {
  auto p = P("1 + x + y");
  CHECK(power_truncated(p, 3, 1) == P("1 + 3*x + 3*y"));
  CHECK(multiply_truncated(P("x + a1*x^2"), P("y"), 2) == P("x*y"));
  CHECK(P("x^2*a1 + y").truncated(1) == P("y"));
  CHECK(P("x^2*a1 + y*u").homogeneous_part(2) == P("a1*x^2"));
  CHECK(P("x + a1*x*y + a1*x^2").coefficient_of(Monomial::of(Variable::x())) == P("1"));
  CHECK(substitute(P("x*y + x"), {{Variable::x(), P("y")}, {Variable::y(), P("x")}}, -1) == P("x*y + y"));
  CHECK(P("2*x + 1/3").is_integral() == false);
  CHECK(P("a3*a1").max_generator() == 3);
}

TEST_CASE("integer Hermite solve") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t rows = rng() % 6 + 1, cols = rng() % 5 + 1;
    IntegerMatrix a(rows, IntegerVector(cols));
    for (auto& row : a)
      for (auto& e : row) e = static_cast<long>(rng() % 13) - 6;
    IntegerVector h0(cols);
    for (auto& e : h0) e = static_cast<long>(rng() % 21) - 10;
    IntegerVector b(rows, 0);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) b[r] += a[r][c] * h0[c];

    auto h = solve_integer(a, cols, b);
    REQUIRE(h.has_value());
    for (std::size_t r = 0; r < rows; ++r) {
      Integer s = 0;
      for (std::size_t c = 0; c < cols; ++c) s += a[r][c] * (*h)[c];
      CHECK(s == b[r]);
    }
    for (auto& k : integer_kernel(a, cols)) {
      for (std::size_t r = 0; r < rows; ++r) {
        Integer s = 0;
        for (std::size_t c = 0; c < cols; ++c) s += a[r][c] * k[c];
        CHECK(s == 0);
      }
    }
    auto form = column_hermite_form(a, cols);
    CHECK(form.rank + integer_kernel(a, cols).size() == cols);
  }
  // 2h = 1 has no integer solution; 2h1 + 4h2 = 6 does.
  CHECK_FALSE(solve_integer({{2}}, 1, {1}).has_value());
  CHECK(solve_integer({{2, 4}}, 2, {6}).has_value());
  CHECK_FALSE(solve_integer({{1, 1}, {1, 1}}, 2, {1, 2}).has_value());
}

TEST_CASE("symmetric cocycles") {
  CHECK(to_string(sym_cocycle(2)) == "x*y");
  CHECK(to_string(sym_cocycle(3)) == "x^2*y + x*y^2");
  CHECK(to_string(sym_cocycle(4)) == "2*x^3*y + 3*x^2*y^2 + 2*x*y^3");
  CHECK_THROWS_AS(sym_cocycle(1), DomainError);

  auto rows = pascal(30);
  std::mt19937_64 rng(3);
  for (int n = 2; n <= 30; ++n) {
    Integer g = 0;
    for (int k = 1; k < n; ++k) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), rows[n][k].get_mpz_t());
    CHECK(cocycle_divisor(n) == g);
    CHECK(g == prime_power_base(n));
    auto c = sym_cocycle(n);
    CHECK(c.is_integral());
    CHECK(coboundary(c).is_zero());
    CHECK(compose(c, kY, kX, -1) == c);
    CHECK(compose(c, kX, Polynomial(), -1).is_zero());
    // Pointwise cochain identity at random integers.
    for (int trial = 0; trial < 5; ++trial) {
      Integer x = static_cast<long>(rng() % 2001) - 1000, y = static_cast<long>(rng() % 2001) - 1000,
              z = static_cast<long>(rng() % 2001) - 1000;
      auto cv = [&](const Integer& a, const Integer& b) {
        Integer s, pa, pb;
        Integer sum = a + b;
        mpz_pow_ui(s.get_mpz_t(), sum.get_mpz_t(), static_cast<unsigned long>(n));
        mpz_pow_ui(pa.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(n));
        mpz_pow_ui(pb.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(n));
        return Integer((s - pa - pb) / g);
      };
      CHECK(cv(y, z) - cv(x + y, z) + cv(x, y + z) - cv(x, y) == 0);
    }
  }
  for (int n : {4, 8, 9, 25, 27}) CHECK(cocycle_divisor(n) > 1);
  for (int n : {6, 12, 30}) CHECK(cocycle_divisor(n) == 1);
}

TEST_CASE("bud defects examples") {
  CHECK(bud_defects(P("x + y"), 5).zero());
  CHECK(bud_defects(P("x + y + a1*x*y"), 1).zero());
  CHECK(bud_defects(P("x + y + a1*x*y"), 6).zero());
  // A quadratic unit defect only shows once degree 2 is retained.
  auto d = bud_defects(P("x + y + x^2"), 2);
  CHECK(d.unit == P("x^2"));
  CHECK_FALSE(d.zero());
  CHECK(bud_defects(P("x + y + x^2"), 1).zero());
  CHECK_FALSE(bud_defects(P("x + y + x^2*y"), 3).commutativity.is_zero());
  // Every symmetric cubic correction is a cocycle, so this one is fine ...
  CHECK(bud_defects(P("x + y + x^2*y + x*y^2"), 3).zero());
  // ... but x^2 y^2 is not a multiple of C_4.
  CHECK_FALSE(bud_defects(P("x + y + x*y + x^2*y^2"), 4).associativity.is_zero());
  CHECK(bud_defects(P("x + y + x*y + x^2*y^2"), 3).zero());
  CHECK_THROWS_AS(bud_defects(P("x + z"), 2), DomainError);
}

TEST_CASE("Lazard stages one and two") {
  auto s0 = initial_state();
  auto s1 = extend_bud(s0);
  CHECK(s1.stage == 1);
  CHECK(to_string(s1.law.law) == "x + y + a1*x*y");
  CHECK(to_string(s1.log.series) == "t - 1/2*a1*t^2");
  CHECK(s1.law.degree == 2);
  CHECK(universal_bud(1).law == s1.law);

  auto s2 = extend_bud(s1);
  CHECK(bud_defects(s2.law.law, 3).zero());
  auto xy2 = s2.law.law.coefficient_of(Monomial::of({{Variable::x(), 1}, {Variable::y(), 2}}));
  CHECK(xy2.coefficient(Monomial::of(Variable::generator(2))) == 1);
  CHECK(s2.generators.size() == 2);
}

TEST_CASE("universal tower invariants") {
  std::mt19937_64 rng(17);
  auto state = initial_state();
  for (int q = 1; q <= 6; ++q) {
    auto prev = state;
    state = extend_bud(prev);
    const auto& f = state.law.law;
    CAPTURE(q);
    CHECK(state.law.degree == q + 1);
    CHECK(bud_defects(f, q + 1).zero());
    CHECK(f.is_integral());
    CHECK(weight_homogeneous(f));
    CHECK(f.max_generator() == q);
    for (int trial = 0; trial < 3; ++trial) {
      auto values = random_values(f, rng);
      CHECK(oracle::is_bud_mod_p(f, q + 1, values));
      CHECK(oracle::log_linearizes_mod_p(f, state.log.series, q + 1, values));
    }
    // Coherence with the previous stage.
    auto a = Variable::generator(q);
    CHECK(substitute(f.truncated(q), {{a, Polynomial()}}, -1) == prev.law.law);
    auto without = substitute(f, {{a, Polynomial()}}, -1);
    CHECK(without == prev.law.law + state.correction);
    CHECK(bud_defects(without, q + 1).zero());
    // h' is homogeneous of degree q+1, symmetric, off the axes, and reduced.
    const auto& h = state.correction;
    CHECK((h.is_zero() || (h.formal_order() == q + 1 && h.formal_degree() == q + 1)));
    CHECK(compose(h, kY, kX, -1) == h);
    CHECK(compose(h, kX, Polynomial(), -1).is_zero());
    CHECK(h.is_integral());
    auto xyq = Monomial::of({{Variable::x(), 1}, {Variable::y(), static_cast<unsigned>(q)}});
    auto c = sym_cocycle(q + 1).coefficient(xyq);
    auto reduced = h.coefficient_of(xyq);
    for (auto& [mu, coef] : reduced.terms()) {
      CHECK(coef >= 0);
      CHECK(coef < c);
    }
    // Log denominators divide lcm(1..q+1).
    auto l = lcm_upto(q + 1);
    for (auto& [m, coef] : state.log.series.terms()) CHECK(mpz_divisible_p(l.get_mpz_t(), coef.get_den().get_mpz_t()));
    // Associativity through the logarithm.
    Polynomial z{Variable::z()};
    auto fxyz = compose(f, compose(f, kX, kY, q + 1), z, q + 1);
    CHECK(state.log.apply(fxyz, q + 1) ==
          (state.log.apply(kX, q + 1) + state.log.apply(kY, q + 1) + state.log.apply(z, q + 1)));
  }
}

TEST_CASE("universal_bud limits") {
  CHECK_THROWS_AS(universal_bud(0), DomainError);
  CHECK_THROWS_AS(universal_bud(9), LimitError);
  CHECK_THROWS_AS(universal_bud(4, 3), LimitError);
  CHECK(universal_bud(8).stage == 8);
}

TEST_CASE("logarithm examples") {
  CHECK(log_of_bud(Bud::make(P("x + y"), 4)).series == P("t"));
  CHECK(log_of_bud(Bud::make(P("x + y + a1*x*y"), 2)).series == P("t - 1/2*a1*t^2"));
  CHECK(log_of_bud(Bud::make(P("x + y + a1*x*y"), 3)).series == P("t - 1/2*a1*t^2 + 1/3*a1^2*t^3"));
  CHECK(log_of_bud(Bud::make(P("x + y + x*y"), 3)).series == P("t - 1/2*t^2 + 1/3*t^3"));
  // log(1 + u t) / u to degree 8.
  Polynomial expected;
  for (int k = 1; k <= 8; ++k) {
    expected += Polynomial(Monomial::of({{Variable::named("u"), static_cast<unsigned>(k - 1)}, {Variable::t(), static_cast<unsigned>(k)}}),
                           Rational(k % 2 == 1 ? 1 : -1, static_cast<unsigned long>(k)));
  }
  CHECK(log_of_bud(Bud::make(P("x + y + u*x*y"), 8)).series == expected);
  CHECK_THROWS_AS(log_of_bud(Bud::make(P("x + y + x^2*y"), 3)), DomainError);
}

TEST_CASE("exponential and round trips") {
  CHECK(fgl_from_log(LogSeries{4, P("t")}).law == P("x + y"));
  CHECK(fgl_from_log(LogSeries{2, P("t - 1/2*a1*t^2")}).law == P("x + y + a1*x*y"));
  CHECK(reversion(LogSeries{3, P("t - 1/2*t^2 + 1/3*t^3")}).series == P("t + 1/2*t^2 + 1/6*t^3"));
  CHECK_THROWS_AS(fgl_from_log(LogSeries{2, P("2*t")}), DomainError);
  CHECK_THROWS_AS(fgl_from_log(LogSeries{2, P("t")}, 3), DomainError);

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    Polynomial phi(Variable::t());
    for (int k = 2; k <= 6; ++k) {
      phi.add_term(Monomial::of(Variable::t(), static_cast<unsigned>(k)),
                   frac(static_cast<long>(rng() % 9) - 4, rng() % 5 + 1));
    }
    LogSeries log{6, phi};
    auto f = fgl_from_log(log);
    CHECK(bud_defects(f.law, 6).zero());
    CHECK(log_of_bud(f) == log);
    auto psi = reversion(log);
    CHECK(log.apply(psi.series, 6) == P("t"));
  }
  for (int q = 1; q <= 5; ++q) {
    auto s = universal_bud(q);
    CHECK(fgl_from_log(log_of_bud(s.law)) == s.law);
  }
}

TEST_CASE("Mishchenko classes") {
  auto s1 = universal_bud(1);
  auto m1 = mishchenko_classes(s1);
  REQUIRE(m1.classes.size() == 2);
  CHECK(m1.classes[0] == Polynomial(1));
  CHECK(m1.classes[1] == P("-a1"));
  for (int q = 1; q <= 6; ++q) {
    auto s = universal_bud(q);
    auto m = mishchenko_classes(s);
    CHECK(m.classes.size() == static_cast<std::size_t>(q + 1));
    CHECK(m.logarithm() == s.log);
    auto g = m.logarithm();
    auto lhs = g.apply(s.law.law, q + 1);
    CHECK(lhs == g.apply(kX, q + 1) + g.apply(kY, q + 1));
  }
}

TEST_CASE("Quillen composition") {
  auto mult = Bud::make(P("x + y + u*x*y"), 3);
  auto a = P("a"), b = P("b");
  CHECK(quillen_c1_tensor(mult, a, b) == P("a + b + u*a*b"));
  CHECK(quillen_c1_tensor(mult, Polynomial(), b) == b);
  CHECK(quillen_c1_tensor(mult, P("x"), P("y"), 2) == P("x + y + u*x*y"));
  CHECK_THROWS_AS(quillen_c1_tensor(mult, P("1 + a"), b), DomainError);
  CHECK_THROWS_AS(quillen_c1_tensor(mult, a, b, 4), DomainError);

  auto f4 = universal_bud(4);
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    std::map<int, Polynomial> assignment;
    for (int k = 1; k <= 4; ++k) assignment[k] = frac(static_cast<long>(rng() % 7) - 3, rng() % 3 + 1);
    auto f = specialize(f4.law, assignment);
    CHECK(bud_defects(f.law, 5).zero());
    auto pa = P("2*x + x^2"), pb = P("y - 3*x*y");
    CHECK(quillen_c1_tensor(f, pa, pb) == quillen_c1_tensor(f, pb, pa));
    CHECK(quillen_c1_tensor(f, Polynomial(), pb) == pb);
  }
}

TEST_CASE("specialization and the classifying map") {
  auto f1 = universal_bud(1).law;
  CHECK(specialize(f1, {{1, Polynomial()}}).law == P("x + y"));
  CHECK(specialize(f1, {{1, P("u")}}).law == P("x + y + u*x*y"));
  CHECK_THROWS_AS(specialize(f1, {}), DomainError);
  CHECK_THROWS_AS(specialize(f1, {{1, P("x")}}), DomainError);

  auto f3 = universal_bud(3);
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    std::map<int, Polynomial> assignment;
    for (int k = 1; k <= 3; ++k) assignment[k] = random_rational_poly(rng, {Variable::named("u")}, 2);
    CHECK(bud_defects(specialize(f3.law, assignment).law, 4).zero());
  }

  auto f4 = universal_bud(4);
  auto target = Bud::make(P("x + y + u*x*y"), 5);
  auto assignment = classifying_assignment(f4, target);
  CHECK(assignment.at(1) == P("u"));
  CHECK(specialize(f4.law, assignment) == target);
  for (int k = 2; k <= 4; ++k) CHECK(assignment.at(k).variables().size() <= 1);
  CHECK_THROWS_AS(classifying_assignment(f4, Bud::make(P("x + y + u*x*y"), 3)), DomainError);
  CHECK_THROWS_AS(classifying_assignment(f4, Bud::make(P("x + y + x^2*y"), 5)), DomainError);

  // Additive law: everything maps to zero.
  for (auto& [k, v] : classifying_assignment(f4, Bud::make(P("x + y"), 5))) CHECK(v.is_zero());
}

TEST_CASE("fgl JSON and assignment parsing") {
  auto s = universal_bud(3);
  auto j = to_json(s);
  CHECK(j["stage"] == 3);
  CHECK(bud_from_json(j["law"]) == s.law);
  CHECK(log_from_json(j["log"]) == s.log);
  CHECK(j["generators"] == nlohmann::json({"a1", "a2", "a3"}));
  CHECK(to_json(mishchenko_classes(universal_bud(1)))["classes"]["1"] == "-a1");
  auto a = parse_assignment("a1=u, v2 = 1/2*u^2");
  CHECK(a.at(1) == P("u"));
  CHECK(a.at(2) == P("1/2*u^2"));
  CHECK_THROWS_AS(parse_assignment("a1"), ParseError);
  CHECK_THROWS_AS(parse_assignment("u=1"), ParseError);
  CHECK_THROWS_AS(parse_assignment("a1=1,a1=2"), ParseError);
  CHECK_THROWS_AS(bud_from_json(nlohmann::json::parse(R"({"terms": []})")), ParseError);
  CHECK_THROWS_AS(polynomial_from_json(nlohmann::json::parse(R"({"terms": [{"mono": {"x": -1}, "coef": "1"}]})")),
                  ParseError);
}
