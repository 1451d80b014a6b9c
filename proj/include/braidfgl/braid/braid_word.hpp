#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "braidfgl/braid/permutation.hpp"

namespace braidfgl::braid {

// A word in the Artin generators of B_n. Letter +i stands for sigma_i and
// -i for its inverse, 1 <= i <= n - 1. The empty word is the identity.
class BraidWord {
 public:
  BraidWord() = default;
  // Throws std::invalid_argument on strands < 1 or a letter outside
  // [1, strands - 1] in absolute value.
  explicit BraidWord(int strands, std::vector<int> letters = {});

  int strands() const { return strands_; }
  std::span<const int> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  BraidWord inverse() const;
  int exponent_sum() const;

  // Concatenation; both words must live on the same number of strands.
  friend BraidWord operator*(const BraidWord& u, const BraidWord& v);
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 1;
  std::vector<int> letters_;
};

// Cancels adjacent sigma_i sigma_i^-1 pairs until none remain.
BraidWord free_reduce(const BraidWord& w);

// Image of w in S_n: s_{i_1} * ... * s_{i_k} with signs ignored, so that
// permutation_of(u * v) == permutation_of(u) * permutation_of(v). The
// strand entering at top position i leaves at bottom position r(i).
Permutation permutation_of(const BraidWord& w);

bool is_pure(const BraidWord& w);

}  // namespace braidfgl::braid
