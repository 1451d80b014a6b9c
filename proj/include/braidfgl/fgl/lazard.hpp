#pragma once

#include <map>
#include <vector>

#include "braidfgl/fgl/bud.hpp"

namespace braidfgl::fgl {

// Stage q of the universal tower: f_q is a (q+1)-bud over Z[a1..aq] and
// log its logarithm to the same degree.
struct LazardState {
  int stage = 0;
  Bud law;
  LogSeries log;
  std::vector<Variable> generators;
  // h' added in the step that produced this stage (zero at stage 0 and 1).
  Polynomial correction;
};

// f_0 = x + y as a 1-bud.
LazardState initial_state();
// f_{q+1} = f_q + h' + a_{q+1} C_{q+2}, with h' the integral symmetric
// correction making f_q + h' a (q+2)-bud, normalised so its x*y^(q+1)
// coefficient lies in [0, c) for c that coefficient of C_{q+2}.
LazardState extend_bud(const LazardState& state);

constexpr int kDefaultMaxStages = 8;
// Throws DomainError for q < 1, LimitError for q > max_stages.
LazardState universal_bud(int q, int max_stages = kDefaultMaxStages);

// [CP^k] = (k+1) m_k for 0 <= k <= q.
struct MishchenkoClasses {
  std::vector<Polynomial> classes;

  // g(t) = sum [CP^k]/(k+1) t^(k+1).
  LogSeries logarithm() const;
};

MishchenkoClasses mishchenko_classes(const LazardState& state);

// Values of a1..aq under which f_q agrees with `target` up to degree q+1.
// The target's coefficients must not involve generators and its degree must
// be at least q+1. Solved one generator at a time through the x*y^k
// coefficient, then checked degree by degree.
std::map<int, Polynomial> classifying_assignment(const LazardState& state, const Bud& target);

}  // namespace braidfgl::fgl
