#include "braidfgl/braid/permutation.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace braidfgl::braid {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::adjacent_transposition(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("transposition index out of range");
  Permutation p = identity(n);
  std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(i)]);
  return p;
}

Permutation Permutation::reversal(int n) {
  Permutation p;
  p.images_.resize(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) p.images_[static_cast<std::size_t>(i - 1)] = n + 1 - i;
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (int i = 1; i <= size(); ++i) p.images_[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i) {
    if ((*this)(i) != i) return false;
  }
  return true;
}

int Permutation::cycle_count() const {
  std::vector<bool> seen(images_.size(), false);
  int cycles = 0;
  for (int i = 1; i <= size(); ++i) {
    if (seen[static_cast<std::size_t>(i - 1)]) continue;
    ++cycles;
    for (int j = i; !seen[static_cast<std::size_t>(j - 1)]; j = (*this)(j)) {
      seen[static_cast<std::size_t>(j - 1)] = true;
    }
  }
  return cycles;
}

int Permutation::inversion_count() const {
  int count = 0;
  for (int a = 1; a <= size(); ++a) {
    for (int b = a + 1; b <= size(); ++b) {
      if ((*this)(a) > (*this)(b)) ++count;
    }
  }
  return count;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw std::invalid_argument("composing permutations of different degree");
  Permutation r;
  r.images_.resize(p.images_.size());
  for (int i = 1; i <= p.size(); ++i) r.images_[static_cast<std::size_t>(i - 1)] = p(q(i));
  return r;
}

}  // namespace braidfgl::braid
