#include "braidfgl/kz/relations.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <thread>

#include "braidfgl/error.hpp"

namespace braidfgl::kz {

namespace {

struct TripleIndex {
  int i, j, k;
};

template <class Task, class Result>
std::vector<Result> run_parallel(const std::vector<Task>& tasks, unsigned threads,
                                 const std::function<Result(const Task&)>& body) {
  std::vector<Result> results(tasks.size());
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
  if (threads <= 1) {
    for (std::size_t t = 0; t < tasks.size(); ++t) results[t] = body(tasks[t]);
    return results;
  }
  std::vector<std::jthread> workers;
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      for (std::size_t t = w; t < tasks.size(); t += threads) results[t] = body(tasks[t]);
    });
  }
  return results;
}

void raise(Rational& best, const Rational& candidate) {
  if (candidate > best) best = candidate;
}

}  // namespace

RelationReport check_infinitesimal_relations(const InfinitesimalSystem& sys, unsigned threads) {
  const int n = sys.points();
  const auto pairs = all_pairs(n);

  std::vector<std::pair<PairIndex, PairIndex>> disjoint;
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    for (std::size_t b = a + 1; b < pairs.size(); ++b) {
      const auto& p = pairs[a];
      const auto& q = pairs[b];
      if (p.i != q.i && p.i != q.j && p.j != q.i && p.j != q.j) disjoint.emplace_back(p, q);
    }
  }
  std::vector<TripleIndex> triples;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) triples.push_back({i, j, k});
    }
  }

  RelationReport report;
  const auto commuting = run_parallel<std::pair<PairIndex, PairIndex>, Rational>(
      disjoint, threads, [&](const auto& pq) {
        return commutator(sys.at(pq.first.i, pq.first.j), sys.at(pq.second.i, pq.second.j)).max_abs();
      });
  for (std::size_t t = 0; t < disjoint.size(); ++t) {
    if (commuting[t] != 0) {
      report.commuting.push_back({disjoint[t].first, disjoint[t].second, commuting[t]});
      raise(report.max_residual, commuting[t]);
    }
  }

  struct TripleResiduals {
    Rational triangle;
    Rational flatness;
  };
  const auto per_triple = run_parallel<TripleIndex, TripleResiduals>(
      triples, threads, [&](const TripleIndex& t) {
        const auto& aij = sys.at(t.i, t.j);
        const auto& aik = sys.at(t.i, t.k);
        const auto& ajk = sys.at(t.j, t.k);
        TripleResiduals r;
        r.triangle = (commutator(aij, aik + ajk) - commutator(ajk, aij + aik)).max_abs();
        r.flatness = std::max(commutator(aij + ajk, aik).max_abs(), commutator(aij + aik, ajk).max_abs());
        return r;
      });
  for (std::size_t t = 0; t < triples.size(); ++t) {
    const auto& [i, j, k] = triples[t];
    if (per_triple[t].triangle != 0) {
      report.triangle.push_back({i, j, k, per_triple[t].triangle});
      raise(report.max_residual, per_triple[t].triangle);
    }
    if (per_triple[t].flatness != 0) {
      report.flatness.push_back({i, j, k, per_triple[t].flatness});
      raise(report.max_residual, per_triple[t].flatness);
    }
  }
  return report;
}

CurvatureVerdict curvature_is_zero(const InfinitesimalSystem& sys) {
  CurvatureVerdict v;
  v.witness = check_infinitesimal_relations(sys);
  v.flat = v.witness.flat();
  return v;
}

ConfigurationPoint::ConfigurationPoint(std::vector<ComplexRational> coordinates)
    : z_(std::move(coordinates)) {
  for (std::size_t a = 0; a < z_.size(); ++a) {
    for (std::size_t b = a + 1; b < z_.size(); ++b) {
      if (z_[a] == z_[b]) {
        throw DomainError("configuration point has z_" + std::to_string(a + 1) + " = z_" +
                          std::to_string(b + 1));
      }
    }
  }
}

namespace {

// Complex matrix as a pair of rational matrices.
struct ComplexMatrix {
  RationalMatrix re;
  RationalMatrix im;
};

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

}  // namespace

Rational numeric_curvature_sample(const InfinitesimalSystem& sys, const ConfigurationPoint& point,
                                  double min_separation) {
  const int n = sys.points();
  if (point.size() != n) {
    throw DomainError("configuration point has " + std::to_string(point.size()) +
                      " coordinates, system has " + std::to_string(n) + " points");
  }
  const Rational min_sq = Rational(min_separation) * Rational(min_separation);
  const std::size_t d = sys.dim();

  // Gamma_a = sum_{j != a} A_aj / (z_a - z_j).
  std::vector<ComplexMatrix> gamma(static_cast<std::size_t>(n),
                                   ComplexMatrix{RationalMatrix(d, d), RationalMatrix(d, d)});
  for (const auto& [pair, a] : sys.matrices()) {
    const auto& zi = point[pair.i - 1];
    const auto& zj = point[pair.j - 1];
    const Rational dre = zi.re - zj.re;
    const Rational dim = zi.im - zj.im;
    const Rational norm = dre * dre + dim * dim;
    if (norm < min_sq) {
      throw DomainError("point is within " + std::to_string(min_separation) + " of the diagonal z_" +
                        std::to_string(pair.i) + " = z_" + std::to_string(pair.j));
    }
    // 1 / (dre + i dim) = (dre - i dim) / norm
    const Rational cre = dre / norm;
    const Rational cim = -dim / norm;
    auto& gi = gamma[static_cast<std::size_t>(pair.i - 1)];
    auto& gj = gamma[static_cast<std::size_t>(pair.j - 1)];
    gi.re += a * cre;
    gi.im += a * cim;
    gj.re -= a * cre;
    gj.im -= a * cim;
  }

  Rational residual = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const auto& ga = gamma[static_cast<std::size_t>(a)];
      const auto& gb = gamma[static_cast<std::size_t>(b)];
      const ComplexMatrix ab = multiply(ga, gb);
      const ComplexMatrix ba = multiply(gb, ga);
      raise(residual, (ab.re - ba.re).max_abs());
      raise(residual, (ab.im - ba.im).max_abs());
    }
  }
  return residual;
}

namespace {

int apply_transposition(int k, int x) {
  if (x == k) return k + 1;
  if (x == k + 1) return k;
  return x;
}

}  // namespace

bool sn_equivariance_check(const InfinitesimalSystem& sys, const std::vector<RationalMatrix>& rho) {
  const int n = sys.points();
  const std::size_t d = sys.dim();
  if (rho.size() != static_cast<std::size_t>(n - 1)) {
    throw DomainError("rho must give " + std::to_string(n - 1) + " adjacent transpositions, got " +
                      std::to_string(rho.size()));
  }
  for (const auto& r : rho) {
    if (r.rows() != d || r.cols() != d) throw DomainError("rho matrices must be " + std::to_string(d) + "x" + std::to_string(d));
  }
  const RationalMatrix id = RationalMatrix::identity(d);
  for (std::size_t a = 0; a < rho.size(); ++a) {
    if (rho[a] * rho[a] != id) {
      throw DomainError("rho(s_" + std::to_string(a + 1) + ")^2 is not the identity");
    }
    for (std::size_t b = a + 1; b < rho.size(); ++b) {
      if (b == a + 1) {
        const RationalMatrix st = rho[a] * rho[b];
        if (st * st * st != id) {
          throw DomainError("(rho(s_" + std::to_string(a + 1) + ") rho(s_" + std::to_string(b + 1) +
                            "))^3 is not the identity");
        }
      } else if (rho[a] * rho[b] != rho[b] * rho[a]) {
        throw DomainError("rho(s_" + std::to_string(a + 1) + ") and rho(s_" +
                          std::to_string(b + 1) + ") do not commute");
      }
    }
  }
  for (std::size_t a = 0; a < rho.size(); ++a) {
    const int k = static_cast<int>(a) + 1;
    const RationalMatrix& r = rho[a];  // an involution, so its own inverse
    for (const auto& [pair, m] : sys.matrices()) {
      const PairIndex image(apply_transposition(k, pair.i), apply_transposition(k, pair.j));
      if (r * m * r != sys.at(image.i, image.j)) return false;
    }
  }
  return true;
}

std::vector<RationalMatrix> tensor_permutation_action(int points, std::size_t dim) {
  const auto sys = transposition_system(points, dim);
  std::vector<RationalMatrix> rho;
  for (int k = 1; k < points; ++k) rho.push_back(sys.at(k, k + 1));
  return rho;
}

}  // namespace braidfgl::kz
