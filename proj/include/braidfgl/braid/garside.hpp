#pragma once

#include <vector>

#include "braidfgl/braid/braid_word.hpp"
#include "braidfgl/braid/permutation.hpp"

namespace braidfgl::braid {

// Left normal form Delta^infimum * p_1 * ... * p_l. Each factor is a
// positive permutation braid, identified with its permutation; none is the
// identity or the half twist, and consecutive factors are left-weighted.
struct GarsideNormalForm {
  int strands = 1;
  int infimum = 0;
  std::vector<Permutation> factors;

  friend bool operator==(const GarsideNormalForm&, const GarsideNormalForm&) = default;
};

// Generators i such that sigma_i is a prefix (starting set) or a suffix
// (finishing set) of the permutation braid of p. Sorted ascending.
std::vector<int> starting_set(const Permutation& p);
std::vector<int> finishing_set(const Permutation& p);

// The positive braid in which each pair of strands crosses at most once and
// whose permutation is p.
BraidWord permutation_braid(const Permutation& p);

BraidWord half_twist(int strands);

GarsideNormalForm left_normal_form(const BraidWord& w);

// Checks every structural invariant of a normal form: factor degree, no
// identity or half-twist factor, and starting set of p_{i+1} contained in
// the finishing set of p_i.
bool is_left_weighted(const GarsideNormalForm& nf);

// Multiplies the normal form back out into a word.
BraidWord to_word(const GarsideNormalForm& nf);

// Word problem in B_n. Throws DomainError if the strand counts differ.
bool words_equal(const BraidWord& u, const BraidWord& v);

}  // namespace braidfgl::braid
