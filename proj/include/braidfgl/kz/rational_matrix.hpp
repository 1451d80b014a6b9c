#pragma once

#include <cstddef>
#include <vector>

#include "braidfgl/rational.hpp"

namespace braidfgl::kz {

// Dense matrix over Q with exact arithmetic. Indices are 0-based.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  // Throws std::invalid_argument on ragged input.
  explicit RationalMatrix(const std::vector<std::vector<Rational>>& rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix scalar(std::size_t n, const Rational& value);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  bool is_zero() const;
  // Largest absolute value among the entries (0 for an empty matrix).
  Rational max_abs() const;
  // Gauss-Jordan over Q; throws DomainError if singular or not square.
  RationalMatrix inverse() const;

  RationalMatrix& operator+=(const RationalMatrix& other);
  RationalMatrix& operator-=(const RationalMatrix& other);
  RationalMatrix& operator*=(const Rational& s);

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(RationalMatrix a, const Rational& s) { return a *= s; }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

// [a, b] = ab - ba.
RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace braidfgl::kz
