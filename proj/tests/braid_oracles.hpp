#pragma once

// Independent checks for braid equality that do not go through the Garside
// machinery: the Burau matrix over Z/p at a random parameter, and the Artin
// action on the free group (faithful, but only usable on short words).

#include <cstdint>
#include <cstdlib>
#include <vector>

#include "braidfgl/braid/braid_word.hpp"

namespace oracle {

using u64 = std::uint64_t;
constexpr u64 kPrime = (u64{1} << 61) - 1;

inline u64 mulmod(u64 a, u64 b) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % kPrime);
}
inline u64 addmod(u64 a, u64 b) { return (a + b) % kPrime; }
inline u64 submod(u64 a, u64 b) { return (a + kPrime - b) % kPrime; }
inline u64 powmod(u64 a, u64 e) {
  u64 r = 1;
  for (; e; e >>= 1, a = mulmod(a, a)) {
    if (e & 1) r = mulmod(r, a);
  }
  return r;
}

using Matrix = std::vector<std::vector<u64>>;

// Unreduced Burau image of w evaluated at t, modulo a Mersenne prime.
inline Matrix burau(const braidfgl::braid::BraidWord& w, u64 t) {
  const auto n = static_cast<std::size_t>(w.strands());
  Matrix m(n, std::vector<u64>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  const u64 t_inv = powmod(t, kPrime - 2);
  for (int letter : w.letters()) {
    const auto i = static_cast<std::size_t>(std::abs(letter) - 1);
    u64 b00, b01, b10, b11;
    if (letter > 0) {
      b00 = submod(1, t), b01 = t, b10 = 1, b11 = 0;
    } else {
      b00 = 0, b01 = 1, b10 = t_inv, b11 = submod(1, t_inv);
    }
    // m <- m * block, touching columns i and i+1 only.
    for (std::size_t r = 0; r < n; ++r) {
      const u64 a = m[r][i], b = m[r][i + 1];
      m[r][i] = addmod(mulmod(a, b00), mulmod(b, b10));
      m[r][i + 1] = addmod(mulmod(a, b01), mulmod(b, b11));
    }
  }
  return m;
}

using FreeWord = std::vector<int>;  // +k = x_k, -k = x_k^-1

inline void append_reduced(FreeWord& out, int letter) {
  if (!out.empty() && out.back() == -letter) {
    out.pop_back();
  } else {
    out.push_back(letter);
  }
}

// Images of x_1..x_n under the Artin action of w (an anti-homomorphism
// B_n -> Aut(F_n), injective).
inline std::vector<FreeWord> artin_action(const braidfgl::braid::BraidWord& w) {
  const int n = w.strands();
  std::vector<FreeWord> images(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) images[static_cast<std::size_t>(k - 1)] = {k};
  for (int letter : w.letters()) {
    const int i = std::abs(letter);
    auto image_of = [&](int x) -> FreeWord {
      if (letter > 0) {
        if (x == i) return {i, i + 1, -i};
        if (x == i + 1) return {i};
      } else {
        if (x == i) return {i + 1};
        if (x == i + 1) return {-(i + 1), i, i + 1};
      }
      return {x};
    };
    for (auto& img : images) {
      FreeWord next;
      for (int g : img) {
        FreeWord sub = image_of(std::abs(g));
        if (g > 0) {
          for (int s : sub) append_reduced(next, s);
        } else {
          for (auto it = sub.rbegin(); it != sub.rend(); ++it) append_reduced(next, -*it);
        }
      }
      img = std::move(next);
    }
  }
  return images;
}

}  // namespace oracle
