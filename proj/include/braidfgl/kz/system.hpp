#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <vector>

#include "braidfgl/kz/rational_matrix.hpp"

namespace braidfgl::kz {

// An unordered pair of point labels, normalised so that i < j (1-based).
struct PairIndex {
  int i = 1;
  int j = 2;

  PairIndex() = default;
  PairIndex(int a, int b) : i(a < b ? a : b), j(a < b ? b : a) {}

  friend auto operator<=>(const PairIndex&, const PairIndex&) = default;
};

// The family {A_ij}, 1 <= i < j <= n, of d x d rational matrices.
class InfinitesimalSystem {
 public:
  // Throws std::invalid_argument unless n >= 2, d >= 1, and every pair is
  // present with a d x d matrix (and no other keys).
  InfinitesimalSystem(int points, std::size_t dim, std::map<PairIndex, RationalMatrix> matrices);

  int points() const { return points_; }
  std::size_t dim() const { return dim_; }
  const RationalMatrix& at(int i, int j) const { return matrices_.at(PairIndex(i, j)); }
  const std::map<PairIndex, RationalMatrix>& matrices() const { return matrices_; }

  friend bool operator==(const InfinitesimalSystem&, const InfinitesimalSystem&) = default;

 private:
  int points_;
  std::size_t dim_;
  std::map<PairIndex, RationalMatrix> matrices_;
};

// All pairs (i, j), 1 <= i < j <= n, in lexicographic order.
std::vector<PairIndex> all_pairs(int points);

// A_ij = lambda_ij on a one-dimensional space.
InfinitesimalSystem scalar_system(int points, const std::map<PairIndex, Rational>& lambdas);

// A_ij swaps tensor factors i and j of (Q^d)^{(x) n}. Throws LimitError if
// d^n exceeds max_total_dim.
InfinitesimalSystem transposition_system(int points, std::size_t dim,
                                         std::size_t max_total_dim = 4096);

// g A_ij g^-1 for every pair; preserves the infinitesimal braid relations.
InfinitesimalSystem conjugate(const InfinitesimalSystem& sys, const RationalMatrix& g);

// Copy of sys with `delta` added to entry (row, col) of A_pair.
InfinitesimalSystem perturb_entry(const InfinitesimalSystem& sys, PairIndex pair, std::size_t row,
                                  std::size_t col, const Rational& delta);

}  // namespace braidfgl::kz
