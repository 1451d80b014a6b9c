#include "braidfgl/fgl/hnf.hpp"

#include <utility>

#include "braidfgl/error.hpp"

namespace braidfgl::fgl {

namespace {

// Column operation (c_i, c_j) <- (c_i, c_j) * [[p, q], [r, s]].
void combine_columns(IntegerMatrix& m, std::size_t i, std::size_t j, const Integer& p, const Integer& q,
                     const Integer& r, const Integer& s) {
  for (auto& row : m) {
    Integer a = row[i];
    Integer b = row[j];
    row[i] = a * p + b * r;
    row[j] = a * q + b * s;
  }
}

void swap_columns(IntegerMatrix& m, std::size_t i, std::size_t j) {
  for (auto& row : m) std::swap(row[i], row[j]);
}

void negate_column(IntegerMatrix& m, std::size_t i) {
  for (auto& row : m) row[i] = -row[i];
}

// c_i <- c_i - k * c_j
void subtract_column(IntegerMatrix& m, std::size_t i, std::size_t j, const Integer& k) {
  for (auto& row : m) row[i] -= k * row[j];
}

}  // namespace

ColumnHermiteForm column_hermite_form(const IntegerMatrix& a, std::size_t columns) {
  for (auto& row : a) {
    if (row.size() != columns) throw DomainError("integer matrix has ragged rows");
  }
  ColumnHermiteForm out;
  out.hermite = a;
  out.transform.assign(columns, IntegerVector(columns, 0));
  for (std::size_t i = 0; i < columns; ++i) out.transform[i][i] = 1;
  auto& h = out.hermite;
  auto& u = out.transform;

  std::size_t pivot = 0;
  for (std::size_t r = 0; r < h.size() && pivot < columns; ++r) {
    // Fold every column right of the pivot into the pivot column via gcd steps.
    for (std::size_t c = pivot + 1; c < columns; ++c) {
      if (h[r][c] == 0) continue;
      if (h[r][pivot] == 0) {
        swap_columns(h, pivot, c);
        swap_columns(u, pivot, c);
        continue;
      }
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), h[r][pivot].get_mpz_t(), h[r][c].get_mpz_t());
      Integer p_over_g = h[r][pivot] / g;
      Integer c_over_g = h[r][c] / g;
      // [[s, -c/g], [t, p/g]] has determinant 1.
      combine_columns(h, pivot, c, s, -c_over_g, t, p_over_g);
      combine_columns(u, pivot, c, s, -c_over_g, t, p_over_g);
    }
    if (h[r][pivot] == 0) continue;
    if (h[r][pivot] < 0) {
      negate_column(h, pivot);
      negate_column(u, pivot);
    }
    for (std::size_t c = 0; c < pivot; ++c) {
      Integer k;
      mpz_fdiv_q(k.get_mpz_t(), h[r][c].get_mpz_t(), h[r][pivot].get_mpz_t());
      if (k != 0) {
        subtract_column(h, c, pivot, k);
        subtract_column(u, c, pivot, k);
      }
    }
    out.pivot_rows.push_back(r);
    ++pivot;
  }
  out.rank = pivot;
  return out;
}

std::optional<IntegerVector> solve_integer(const IntegerMatrix& a, std::size_t columns,
                                           const IntegerVector& b) {
  if (b.size() != a.size()) throw DomainError("right-hand side has the wrong length");
  auto form = column_hermite_form(a, columns);
  const auto& h = form.hermite;
  IntegerVector y(columns, 0);
  for (std::size_t p = 0; p < form.rank; ++p) {
    std::size_t r = form.pivot_rows[p];
    Integer rest = b[r];
    for (std::size_t q = 0; q < p; ++q) rest -= h[r][q] * y[q];
    if (!mpz_divisible_p(rest.get_mpz_t(), h[r][p].get_mpz_t())) return std::nullopt;
    y[p] = rest / h[r][p];
  }
  for (std::size_t r = 0; r < h.size(); ++r) {
    Integer lhs = 0;
    for (std::size_t q = 0; q < form.rank; ++q) lhs += h[r][q] * y[q];
    if (lhs != b[r]) return std::nullopt;
  }
  IntegerVector x(columns, 0);
  for (std::size_t i = 0; i < columns; ++i) {
    for (std::size_t q = 0; q < form.rank; ++q) x[i] += form.transform[i][q] * y[q];
  }
  return x;
}

std::vector<IntegerVector> integer_kernel(const IntegerMatrix& a, std::size_t columns) {
  auto form = column_hermite_form(a, columns);
  std::vector<IntegerVector> basis;
  for (std::size_t q = form.rank; q < columns; ++q) {
    IntegerVector v(columns);
    for (std::size_t i = 0; i < columns; ++i) v[i] = form.transform[i][q];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace braidfgl::fgl
