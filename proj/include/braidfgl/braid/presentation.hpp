#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "braidfgl/braid/braid_word.hpp"

namespace braidfgl::braid {

// A presentation (generators, relators) of a group. Relators are stored as
// words over generators 1..generator_count, i.e. braid-shaped words on
// generator_count + 1 strands. No word problem is claimed for arbitrary
// codes; they only feed the test-pair generator.
struct GroupCode {
  int generator_count = 0;
  std::vector<BraidWord> relators;
};

// The Artin presentation of B_n: far commutation relators
// s_i s_j s_i^-1 s_j^-1 (|i - j| > 1) followed by braid relators
// s_i s_{i+1} s_i s_{i+1}^-1 s_i^-1 s_{i+1}^-1.
GroupCode artin_code(int strands);

struct RelatorSplice {
  std::size_t relator_index = 0;
  std::size_t position = 0;
  bool inverted = false;
  // Empty for a bare relator; otherwise g r g^-1 is spliced in.
  BraidWord conjugator;
};

// Splices a (possibly inverted, possibly conjugated) relator into w. The
// result equals w in the presented group. Throws std::out_of_range on a
// bad relator index or position and DomainError if the code does not match
// the word's strand count.
BraidWord insert_relator(const BraidWord& w, const GroupCode& code, const RelatorSplice& splice);

// Uniform random word of the given length with no cancelling neighbours.
BraidWord random_word(int strands, std::size_t length, std::mt19937_64& rng);

// A word w' equal to w in B_n built from `insertions` random relator
// splices (random conjugators of length <= 3), followed by free reduction
// when `reduce` is set.
BraidWord scramble(const BraidWord& w, int insertions, bool reduce, std::mt19937_64& rng);

}  // namespace braidfgl::braid
