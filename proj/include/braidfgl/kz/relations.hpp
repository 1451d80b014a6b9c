#pragma once

#include <vector>

#include "braidfgl/kz/system.hpp"
#include "braidfgl/rational.hpp"

namespace braidfgl::kz {

struct CommutingViolation {
  PairIndex first;
  PairIndex second;
  Rational residual;  // max |entry| of [A_first, A_second]
};

struct TripleViolation {
  int i = 0;
  int j = 0;
  int k = 0;
  Rational residual;
};

// Result of checking the infinitesimal braid relations.
//
//   commuting: [A_ij, A_kl] != 0 for disjoint {i,j}, {k,l}.
//   triangle:  [A_ij, A_ik + A_jk] != [A_jk, A_ij + A_ik] for i < j < k.
//   flatness:  [A_ij + A_jk, A_ik] != 0 or [A_ij + A_ik, A_jk] != 0, the two
//              independent dz-coefficients the triple contributes to the
//              curvature once the Arnold identity is used. The triangle
//              equality is implied by these but does not imply them.
struct RelationReport {
  std::vector<CommutingViolation> commuting;
  std::vector<TripleViolation> triangle;
  std::vector<TripleViolation> flatness;
  Rational max_residual;

  bool empty() const { return commuting.empty() && triangle.empty() && flatness.empty(); }
  bool satisfies_triangle_form() const { return commuting.empty() && triangle.empty(); }
  bool flat() const { return commuting.empty() && flatness.empty(); }
};

// Exact check of every relation. `threads` > 1 splits the index tuples
// across worker threads; the report is identical either way.
RelationReport check_infinitesimal_relations(const InfinitesimalSystem& sys, unsigned threads = 1);

struct CurvatureVerdict {
  bool flat = false;
  RelationReport witness;
};

// Curvature of d - Gamma with Gamma = sum A_ij dlog(z_i - z_j). Each form is
// closed, so the curvature is Gamma ^ Gamma and vanishes exactly when the
// commuting and flatness families hold.
CurvatureVerdict curvature_is_zero(const InfinitesimalSystem& sys);

struct ComplexRational {
  Rational re;
  Rational im;

  friend bool operator==(const ComplexRational&, const ComplexRational&) = default;
};

// A point of the configuration space of n distinct points in C.
class ConfigurationPoint {
 public:
  // Throws DomainError if two coordinates coincide.
  explicit ConfigurationPoint(std::vector<ComplexRational> coordinates);

  int size() const { return static_cast<int>(z_.size()); }
  const ComplexRational& operator[](int i) const { return z_[static_cast<std::size_t>(i)]; }
  const std::vector<ComplexRational>& coordinates() const { return z_; }

 private:
  std::vector<ComplexRational> z_;
};

// Writes Gamma = sum_a Gamma_a dz_a at the point and returns the largest
// max(|Re|, |Im|) over the entries of the coefficients [Gamma_a, Gamma_b]
// of dz_a ^ dz_b (a < b), computed exactly. Throws DomainError when the
// point has the wrong size or two coordinates are closer than
// `min_separation`.
Rational numeric_curvature_sample(const InfinitesimalSystem& sys, const ConfigurationPoint& point,
                                  double min_separation = 1e-9);

// rho[k] is the action of the adjacent transposition (k+1 k+2). Checks the
// Coxeter relations of S_n first (DomainError if they fail), then whether
// rho(s) A_ij rho(s)^-1 = A_{s(i) s(j)} for every generator s and pair.
bool sn_equivariance_check(const InfinitesimalSystem& sys, const std::vector<RationalMatrix>& rho);

// The permutation action of S_n on the tensor power used by
// transposition_system.
std::vector<RationalMatrix> tensor_permutation_action(int points, std::size_t dim);

}  // namespace braidfgl::kz
