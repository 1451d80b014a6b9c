#include "braidfgl/kz/rational_matrix.hpp"

#include <stdexcept>
#include <utility>

#include "braidfgl/error.hpp"

namespace braidfgl::kz {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(const std::vector<std::vector<Rational>>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix rows");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) { return scalar(n, 1); }

RationalMatrix RationalMatrix::scalar(std::size_t n, const Rational& value) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = value;
  return m;
}

bool RationalMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (e != 0) return false;
  }
  return true;
}

Rational RationalMatrix::max_abs() const {
  Rational best = 0;
  for (const auto& e : entries_) {
    const Rational a = abs_value(e);
    if (a > best) best = a;
  }
  return best;
}

RationalMatrix RationalMatrix::inverse() const {
  if (rows_ != cols_) throw DomainError("inverse of a non-square matrix");
  const std::size_t n = rows_;
  RationalMatrix a = *this;
  RationalMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw DomainError("matrix is singular");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const Rational p = a(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) /= p;
      inv(col, c) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("shape mismatch in +");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("shape mismatch in -");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch in *");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j) != 0) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) { return a * b - b * a; }

}  // namespace braidfgl::kz
