#include "braidfgl/braid/braid_word.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace braidfgl::braid {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw std::invalid_argument("a braid needs at least one strand");
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    const int g = std::abs(letters_[k]);
    if (g < 1 || g > strands_ - 1) {
      throw std::invalid_argument("letter " + std::to_string(letters_[k]) + " at position " +
                                  std::to_string(k) + " is not a generator of B_" +
                                  std::to_string(strands_));
    }
  }
}

BraidWord BraidWord::inverse() const {
  BraidWord inv;
  inv.strands_ = strands_;
  inv.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) inv.letters_.push_back(-*it);
  return inv;
}

int BraidWord::exponent_sum() const {
  return std::accumulate(letters_.begin(), letters_.end(), 0,
                         [](int acc, int letter) { return acc + (letter > 0 ? 1 : -1); });
}

BraidWord operator*(const BraidWord& u, const BraidWord& v) {
  if (u.strands_ != v.strands_) {
    throw std::invalid_argument("multiplying braids on " + std::to_string(u.strands_) + " and " +
                                std::to_string(v.strands_) + " strands");
  }
  BraidWord w;
  w.strands_ = u.strands_;
  w.letters_.reserve(u.letters_.size() + v.letters_.size());
  w.letters_.insert(w.letters_.end(), u.letters_.begin(), u.letters_.end());
  w.letters_.insert(w.letters_.end(), v.letters_.begin(), v.letters_.end());
  return w;
}

BraidWord free_reduce(const BraidWord& w) {
  // Stack-based: a single pass cancels nested pairs as well.
  std::vector<int> out;
  out.reserve(w.length());
  for (int letter : w.letters()) {
    if (!out.empty() && out.back() == -letter) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return BraidWord(w.strands(), std::move(out));
}

Permutation permutation_of(const BraidWord& w) {
  Permutation p = Permutation::identity(w.strands());
  for (int letter : w.letters()) {
    p = p * Permutation::adjacent_transposition(w.strands(), std::abs(letter));
  }
  return p;
}

bool is_pure(const BraidWord& w) { return permutation_of(w).is_identity(); }

}  // namespace braidfgl::braid
