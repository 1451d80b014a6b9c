#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "braidfgl/error.hpp"
#include "braidfgl/kz/holonomy.hpp"
#include "braidfgl/kz/io.hpp"
#include "braidfgl/kz/relations.hpp"
#include "braidfgl/kz/system.hpp"

using namespace braidfgl;
using namespace braidfgl::kz;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

RationalMatrix unit(std::size_t d, std::size_t r, std::size_t c) {
  RationalMatrix m(d, d);
  m(r, c) = 1;
  return m;
}

InfinitesimalSystem three_point(RationalMatrix a12, RationalMatrix a13, RationalMatrix a23) {
  const std::size_t d = a12.rows();
  return InfinitesimalSystem(3, d, {{{1, 2}, std::move(a12)}, {{1, 3}, std::move(a13)}, {{2, 3}, std::move(a23)}});
}

// E11, E12, 0: the printed triangle relation fails at (1, 2, 3).
InfinitesimalSystem violating_system() {
  return three_point(unit(2, 0, 0), unit(2, 0, 1), RationalMatrix(2, 2));
}

InfinitesimalSystem scalar2(const Rational& a) { return scalar_system(2, {{{1, 2}, a}}); }

ConfigurationPoint point(std::initializer_list<std::pair<Rational, Rational>> coords) {
  std::vector<ComplexRational> z;
  for (const auto& [re, im] : coords) z.push_back({re, im});
  return ConfigurationPoint(std::move(z));
}

}  // namespace

TEST_CASE("RationalMatrix arithmetic") {
  const RationalMatrix a({{1, 2}, {3, 4}});
  const RationalMatrix inv = a.inverse();
  CHECK(a * inv == RationalMatrix::identity(2));
  CHECK(inv(0, 0) == -2);
  CHECK(inv(1, 0) == Rational(3, 2));
  CHECK_THROWS_AS(RationalMatrix({{1, 2}, {2, 4}}).inverse(), DomainError);
  CHECK(commutator(unit(2, 0, 0), unit(2, 0, 1)) == unit(2, 0, 1));
  CHECK(RationalMatrix({{Rational(-7, 2), 1}, {0, 3}}).max_abs() == Rational(7, 2));
}

TEST_CASE("InfinitesimalSystem validation") {
  CHECK_THROWS_AS(InfinitesimalSystem(3, 1, {{{1, 2}, RationalMatrix::scalar(1, 1)}}), std::invalid_argument);
  CHECK_THROWS_AS(InfinitesimalSystem(1, 1, {}), std::invalid_argument);
  CHECK_THROWS_AS(InfinitesimalSystem(2, 2, {{{1, 2}, RationalMatrix::scalar(1, 1)}}), std::invalid_argument);
  CHECK(PairIndex(3, 1) == PairIndex(1, 3));
}

TEST_CASE("transposition_system") {
  const auto s22 = transposition_system(2, 2);
  CHECK(s22.dim() == 4);
  // e_a (x) e_b -> e_b (x) e_a with flat index 2a + b.
  CHECK(s22.at(1, 2) == RationalMatrix({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}));
  CHECK(transposition_system(2, 1).at(1, 2) == RationalMatrix::identity(1));
  CHECK(check_infinitesimal_relations(transposition_system(3, 2)).empty());
  CHECK_THROWS_AS(transposition_system(13, 2), LimitError);
}

TEST_CASE("check_infinitesimal_relations examples") {
  CHECK(check_infinitesimal_relations(scalar_system(3, {{{1, 2}, 1}, {{1, 3}, -2}, {{2, 3}, Rational(1, 7)}})).empty());
  for (auto [n, d] : {std::pair{2, 2}, {3, 2}, {4, 2}, {3, 3}}) {
    CHECK(check_infinitesimal_relations(transposition_system(n, static_cast<std::size_t>(d))).empty());
  }
  const auto report = check_infinitesimal_relations(violating_system());
  REQUIRE(report.triangle.size() == 1);
  CHECK(report.triangle[0].i == 1);
  CHECK(report.triangle[0].j == 2);
  CHECK(report.triangle[0].k == 3);
  CHECK(report.triangle[0].residual == 1);
  CHECK_FALSE(report.empty());

  // n = 4: A_12 and A_34 must commute.
  auto sys = transposition_system(4, 1);
  std::map<PairIndex, RationalMatrix> m;
  for (const auto& p : all_pairs(4)) m.emplace(p, RationalMatrix(2, 2));
  m[PairIndex(1, 2)] = unit(2, 0, 0);
  m[PairIndex(3, 4)] = unit(2, 0, 1);
  const auto r4 = check_infinitesimal_relations(InfinitesimalSystem(4, 2, m));
  REQUIRE(r4.commuting.size() == 1);
  CHECK(r4.commuting[0].first == PairIndex(1, 2));
  CHECK(r4.commuting[0].second == PairIndex(3, 4));
}

// Basis vector e_{a...a} of the tensor power is fixed by every swap, so
// E_rc with r and c both of that form commutes with the whole system.
bool constant_digits(std::size_t index, int n, std::size_t d) {
  const std::size_t digit = index % d;
  for (int k = 0; k < n; ++k, index /= d) {
    if (index % d != digit) return false;
  }
  return true;
}

TEST_CASE("single-entry perturbations of transposition systems") {
  for (auto [n, d] : {std::pair{3, 2}, {4, 2}, {3, 3}}) {
    const auto dim = static_cast<std::size_t>(d);
    const auto sys = transposition_system(n, dim);
    for (const auto& [pair, a] : sys.matrices()) {
      for (std::size_t r = 0; r < sys.dim(); ++r) {
        for (std::size_t c = 0; c < sys.dim(); ++c) {
          const bool invisible = constant_digits(r, n, dim) && constant_digits(c, n, dim);
          CHECK(check_infinitesimal_relations(perturb_entry(sys, pair, r, c, 1)).empty() == invisible);
        }
      }
    }
  }
}

TEST_CASE("threaded relation check matches the serial one") {
  const auto sys = perturb_entry(transposition_system(4, 2), {2, 4}, 3, 5, 1);
  const auto serial = check_infinitesimal_relations(sys, 1);
  const auto threaded = check_infinitesimal_relations(sys, 4);
  CHECK(to_json(serial) == to_json(threaded));
}

TEST_CASE("curvature_is_zero") {
  CHECK(curvature_is_zero(scalar2(5)).flat);
  CHECK(curvature_is_zero(transposition_system(3, 2)).flat);
  const auto v = curvature_is_zero(violating_system());
  CHECK_FALSE(v.flat);
  REQUIRE_FALSE(v.witness.triangle.empty());
  CHECK(v.witness.triangle[0].k == 3);
}

TEST_CASE("the printed triangle equality is weaker than flatness") {
  // A_12 = E11, A_23 = E12, A_13 = -2 E12 satisfies
  // [A12, A13 + A23] = [A23, A12 + A13] yet the curvature does not vanish.
  const auto sys = three_point(unit(2, 0, 0), unit(2, 0, 1) * Rational(-2), unit(2, 0, 1));
  const auto report = check_infinitesimal_relations(sys);
  CHECK(report.triangle.empty());
  CHECK(report.satisfies_triangle_form());
  CHECK_FALSE(report.flatness.empty());
  CHECK_FALSE(curvature_is_zero(sys).flat);
  CHECK(numeric_curvature_sample(sys, point({{0, 0}, {1, 0}, {Rational(5, 2), 1}})) > 0);
}

TEST_CASE("numeric_curvature_sample") {
  const auto z3 = point({{0, 0}, {1, 0}, {Rational(5, 2), 0}});
  CHECK(numeric_curvature_sample(scalar_system(3, {{{1, 2}, 0}, {{1, 3}, 0}, {{2, 3}, 0}}), z3) == 0);
  CHECK(numeric_curvature_sample(transposition_system(3, 2), z3) == 0);
  CHECK(numeric_curvature_sample(violating_system(), point({{Rational(1, 3), 2}, {-1, Rational(3, 4)}, {5, -2}})) > 0);
  CHECK_THROWS_AS(point({{1, 0}, {1, 0}}), DomainError);
  CHECK_THROWS_AS(numeric_curvature_sample(violating_system(), point({{0, 0}, {Rational("1/1000000000000"), 0}, {1, 0}})), DomainError);
  CHECK_THROWS_AS(numeric_curvature_sample(violating_system(), point({{0, 0}, {1, 0}})), DomainError);
}

TEST_CASE("curvature_is_zero agrees with sampling on random systems") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> small(-2, 2);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 3 + trial % 2;
    const auto base = transposition_system(n, 2);
    // c P_ij + lambda_ij I, conjugated by a unipotent upper-triangular g.
    std::map<PairIndex, RationalMatrix> m;
    const Rational c(1 + static_cast<int>(rng() % 3), 2);
    for (const auto& [pair, a] : base.matrices()) {
      m.emplace(pair, a * c + RationalMatrix::scalar(base.dim(), Rational(small(rng), 3)));
    }
    RationalMatrix g = RationalMatrix::identity(base.dim());
    for (std::size_t r = 0; r < base.dim(); ++r)
      for (std::size_t col = r + 1; col < base.dim(); ++col) g(r, col) = small(rng);
    InfinitesimalSystem sys = conjugate(InfinitesimalSystem(n, base.dim(), m), g);
    const bool perturbed = trial % 2 == 0;
    if (perturbed) sys = perturb_entry(sys, {1, n}, rng() % sys.dim(), rng() % sys.dim(), 1);
    const bool flat = curvature_is_zero(sys).flat;
    if (!perturbed) CHECK(flat);
    std::vector<ComplexRational> z;
    for (int k = 0; k < n; ++k) z.push_back({Rational(k) + Rational(small(rng), 7), Rational(small(rng), 5)});
    CHECK(flat == (numeric_curvature_sample(sys, ConfigurationPoint(z)) == 0));
  }
}

TEST_CASE("sn_equivariance_check") {
  CHECK(sn_equivariance_check(scalar_system(3, {{{1, 2}, 2}, {{1, 3}, 2}, {{2, 3}, 2}}),
                              {RationalMatrix::identity(1), RationalMatrix::identity(1)}));
  CHECK(sn_equivariance_check(transposition_system(3, 2), tensor_permutation_action(3, 2)));
  CHECK(sn_equivariance_check(transposition_system(4, 2), tensor_permutation_action(4, 2)));
  CHECK_FALSE(sn_equivariance_check(scalar_system(3, {{{1, 2}, 1}, {{1, 3}, 2}, {{2, 3}, 1}}),
                                    {RationalMatrix::identity(1), RationalMatrix::identity(1)}));
  // rho(s_1) = 2 is not an involution.
  CHECK_THROWS_AS(sn_equivariance_check(scalar_system(3, {{{1, 2}, 1}, {{1, 3}, 1}, {{2, 3}, 1}}),
                                        {RationalMatrix::scalar(1, 2), RationalMatrix::identity(1)}),
                  DomainError);
  // Two non-commuting-enough involutions: braid relation fails.
  const RationalMatrix swap({{0, 1}, {1, 0}});
  const RationalMatrix flip({{1, 0}, {0, -1}});
  CHECK_THROWS_AS(sn_equivariance_check(three_point(RationalMatrix(2, 2), RationalMatrix(2, 2), RationalMatrix(2, 2)), {swap, flip}),
                  DomainError);
  CHECK_THROWS_AS(sn_equivariance_check(transposition_system(3, 2), {RationalMatrix::identity(8)}), DomainError);
}

TEST_CASE("holonomy for two points is exp(2 pi i A)") {
  const auto r = holonomy(scalar2(Rational(1, 2)), LoopPath::circle(2, 1, 2, 1.0), 4096);
  CHECK(std::abs(r.matrix(0, 0) - std::complex<double>(-1.0, 0.0)) < 1e-6);
  CHECK(r.step_count == 4096);
  CHECK(r.error_estimate < 1e-9);

  const auto zero = holonomy(scalar2(0), LoopPath::circle(2, 1, 2, 0.5), 64);
  CHECK(std::abs(zero.matrix(0, 0) - 1.0) < 1e-14);

  const auto outside = holonomy(scalar2(Rational(1, 2)), LoopPath::offset_circle(2, 1, 0.25), 4096);
  CHECK(std::abs(outside.matrix(0, 0) - 1.0) < 1e-6);

  // Diagonal A_12: entrywise exponentials.
  RationalMatrix diag(2, 2);
  diag(0, 0) = Rational(1, 3);
  diag(1, 1) = Rational(-2, 5);
  const InfinitesimalSystem sys(2, 2, {{{1, 2}, diag}});
  const auto d = holonomy(sys, LoopPath::circle(2, 2, 1, 1.0), 4096);
  CHECK(std::abs(d.matrix(0, 0) - std::polar(1.0, kTwoPi / 3.0)) < 1e-6);
  CHECK(std::abs(d.matrix(1, 1) - std::polar(1.0, -kTwoPi * 2.0 / 5.0)) < 1e-6);
  CHECK(std::abs(d.matrix(0, 1)) < 1e-12);
}

TEST_CASE("RK4 converges at fourth order") {
  const auto sys = scalar2(Rational(1, 2));
  const auto loop = LoopPath::circle(2, 1, 2, 1.0);
  const double e1 = holonomy(sys, loop, 64).error_estimate;
  const double e2 = holonomy(sys, loop, 128).error_estimate;
  CHECK(e1 / e2 >= 8.0);
  CHECK(e1 / e2 <= 32.0);
}

TEST_CASE("holonomy is homotopy invariant and multiplicative for a flat system") {
  const auto sys = transposition_system(3, 2);
  const auto small = holonomy(sys, LoopPath::circle(3, 1, 2, 0.5), 4096);
  const auto large = holonomy(sys, LoopPath::circle(3, 1, 2, 0.8), 4096);
  CHECK((small.matrix - large.matrix).cwiseAbs().maxCoeff() < 1e-6);

  const auto g1 = LoopPath::circle(3, 1, 2, 0.5);
  const auto g2 = LoopPath::circle(3, 3, 2, 0.5);
  const auto w1 = holonomy(sys, g1, 4096).matrix;
  const auto w2 = holonomy(sys, g2, 4096).matrix;
  const auto w12 = holonomy(sys, g1.then(g2), 8192).matrix;
  CHECK((w12 - w2 * w1).cwiseAbs().maxCoeff() < 1e-5);
}

TEST_CASE("holonomy errors") {
  CHECK_THROWS_AS(holonomy(violating_system(), LoopPath::circle(3, 1, 2, 0.5), 64), DomainError);
  CHECK_NOTHROW(holonomy(violating_system(), LoopPath::circle(3, 1, 2, 0.5), 64, {.allow_nonflat = true}));
  // z_1 circling z_2 at full radius runs through z_3 = 2.
  CHECK_THROWS_AS(holonomy(transposition_system(3, 1), LoopPath::circle(3, 1, 2, 1.0), 64), DomainError);
  CHECK_THROWS_AS(holonomy(scalar2(1), LoopPath::circle(2, 1, 2, 1.0), 8), DomainError);
  CHECK_THROWS_AS(holonomy(scalar2(1), LoopPath::circle(3, 1, 2, 0.5), 64), DomainError);
  CHECK_THROWS_AS(LoopPath::circle(2, 1, 1, 0.5), DomainError);
  CHECK_THROWS_AS(LoopPath::polyline({{0.0, 1.0}, {0.5, 1.0}}), DomainError);
}

TEST_CASE("polyline loops") {
  // A square around z_2 = 1 traversed by z_1, starting and ending at 0.
  using c = std::complex<double>;
  const std::vector<Configuration> square = {
      {c(0, 0), c(1, 0)}, {c(2, -1), c(1, 0)}, {c(2, 1), c(1, 0)}, {c(0, 1), c(1, 0)}, {c(0, 0), c(1, 0)}};
  const auto r = holonomy(scalar2(Rational(1, 3)), LoopPath::polyline(square), 4096);
  CHECK(std::abs(r.matrix(0, 0) - std::polar(1.0, kTwoPi / 3.0)) < 1e-6);
}

TEST_CASE("JSON forms") {
  const auto sys = perturb_entry(transposition_system(3, 2), {1, 3}, 0, 1, Rational(-1, 2));
  const auto j = to_json(sys);
  CHECK(system_from_json(nlohmann::json::parse(j.dump())) == sys);
  const auto parsed = system_from_json(nlohmann::json::parse(
      R"({"n": 2, "dim": 2, "A": {"1,2": [["1/2","0"],[0,"1/2"]]}})"));
  CHECK(parsed.at(1, 2) == RationalMatrix::scalar(2, Rational(1, 2)));
  CHECK_THROWS_AS(system_from_json(nlohmann::json::parse(R"({"n": 2, "dim": 1, "A": {"1-2": [["1"]]}})")), ParseError);
  CHECK_THROWS_AS(system_from_json(nlohmann::json::parse(R"({"n": 3, "dim": 1, "A": {"1,2": [["1"]]}})")), ParseError);
  CHECK_THROWS_AS(system_from_json(nlohmann::json::parse(R"({"n": 2, "dim": 1, "A": {"1,2": [["x"]]}})")), ParseError);
  CHECK(complex_from_json(to_json(std::complex<double>(0.25, -3.0))) == std::complex<double>(0.25, -3.0));
  CHECK_THROWS_AS(parse_loop_spec("circle:1,2", 2), ParseError);
  CHECK_THROWS_AS(parse_loop_spec("spiral:1,2", 2), ParseError);
  CHECK_THROWS_AS(parse_loop_spec("polyline:@/nonexistent/file.json", 2), ParseError);
  CHECK(parse_loop_spec("circle:1,2,0.5", 3).pieces().size() == 3);
  CHECK(parse_loop_spec("offset:2,0.25", 3).pieces().size() == 1);
}
