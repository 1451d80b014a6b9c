#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace braidfgl::braid {

// A permutation of {1, ..., n}, stored as its image list r(1), ..., r(n).
//
// Composition is ordinary function composition: (p * q)(i) = p(q(i)).
class Permutation {
 public:
  Permutation() = default;
  // Throws std::invalid_argument unless `images` is a bijection of 1..n.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  // The transposition (i i+1), 1 <= i < n.
  static Permutation adjacent_transposition(int n, int i);
  // i -> n + 1 - i, the permutation underlying the half twist.
  static Permutation reversal(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  int cycle_count() const;
  int inversion_count() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

}  // namespace braidfgl::braid
