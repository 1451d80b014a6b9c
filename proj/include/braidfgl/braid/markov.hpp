#pragma once

#include <array>
#include <variant>
#include <vector>

#include "braidfgl/braid/braid_word.hpp"
#include "braidfgl/braid/permutation.hpp"

namespace braidfgl::braid {

struct Conjugate {
  BraidWord by;
};
struct Stabilize {
  int sign = +1;
};
struct Destabilize {};

using MarkovMove = std::variant<Conjugate, Stabilize, Destabilize>;

// conjugate(g): g w g^-1 on n strands.
// stabilize(s):  w sigma_n^s on n + 1 strands.
// destabilize:   w' on n - 1 strands, where free_reduce(w) = w' sigma_{n-1}^{+-1}
//                and w' avoids sigma_{n-1}; DomainError otherwise.
BraidWord markov_move(const BraidWord& w, const MarkovMove& move);

// Orientation-independent shadow of the closed braid.
struct ClosureSummary {
  int components = 0;
  int exponent_sum = 0;
  int strands = 0;

  friend bool operator==(const ClosureSummary&, const ClosureSummary&) = default;
};

ClosureSummary closure_summary(const BraidWord& w);

// The tautological cobordism of a braid: n intervals with top ends
// (i, 0, 1) and bottom ends (r(i), 0, 0), r = permutation_of(w).
struct BraidCobordism {
  using Point = std::array<int, 3>;

  int intervals = 0;
  Permutation permutation;
  std::vector<Point> top;
  std::vector<Point> bottom;
};

BraidCobordism braid_cobordism(const BraidWord& w);

}  // namespace braidfgl::braid
