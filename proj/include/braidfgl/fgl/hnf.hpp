#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "braidfgl/rational.hpp"

namespace braidfgl::fgl {

using IntegerVector = std::vector<Integer>;
// Row-major, every row the same length.
using IntegerMatrix = std::vector<IntegerVector>;

// Column-style Hermite form: A * U = H with U unimodular. The first `rank`
// columns of H are in column echelon form with positive pivots, the rest are
// zero. Entries left of a pivot are reduced into [0, pivot).
struct ColumnHermiteForm {
  IntegerMatrix hermite;
  IntegerMatrix transform;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
};

ColumnHermiteForm column_hermite_form(const IntegerMatrix& a, std::size_t columns);

// An integer solution of A h = b, or nullopt when none exists. Free
// coordinates (in the Hermite basis) are set to zero.
std::optional<IntegerVector> solve_integer(const IntegerMatrix& a, std::size_t columns,
                                           const IntegerVector& b);

// Basis of the integer kernel {h : A h = 0}.
std::vector<IntegerVector> integer_kernel(const IntegerMatrix& a, std::size_t columns);

}  // namespace braidfgl::fgl
