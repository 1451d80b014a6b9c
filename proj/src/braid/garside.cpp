#include "braidfgl/braid/garside.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "braidfgl/error.hpp"

namespace braidfgl::braid {

namespace {

bool in_starting_set(const Permutation& p, int i) {
  // sigma_i * X == p with X positive iff value i+1 precedes value i.
  const Permutation inv = p.inverse();
  return inv(i) > inv(i + 1);
}

bool in_finishing_set(const Permutation& p, int i) { return p(i) > p(i + 1); }

// Conjugation by the half twist: Delta * X * Delta^-1.
Permutation flip(const Permutation& p) {
  const Permutation delta = Permutation::reversal(p.size());
  return delta * p * delta;
}

// Moves generators from the front of `right` onto the end of `left` until
// the pair is left-weighted. Returns true if anything moved.
bool make_left_weighted(Permutation& left, Permutation& right) {
  const int n = left.size();
  bool changed = false;
  for (bool again = true; again;) {
    again = false;
    const Permutation right_inv = right.inverse();
    for (int i = 1; i < n; ++i) {
      if (right_inv(i) > right_inv(i + 1) && !in_finishing_set(left, i)) {
        const Permutation s = Permutation::adjacent_transposition(n, i);
        left = left * s;
        right = s * right;
        changed = again = true;
        break;
      }
    }
  }
  return changed;
}

void sweep_until_left_weighted(std::vector<Permutation>& factors) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = factors.size(); k-- > 1;) {
      changed |= make_left_weighted(factors[k - 1], factors[k]);
    }
  }
}

}  // namespace

std::vector<int> starting_set(const Permutation& p) {
  std::vector<int> out;
  for (int i = 1; i < p.size(); ++i) {
    if (in_starting_set(p, i)) out.push_back(i);
  }
  return out;
}

std::vector<int> finishing_set(const Permutation& p) {
  std::vector<int> out;
  for (int i = 1; i < p.size(); ++i) {
    if (in_finishing_set(p, i)) out.push_back(i);
  }
  return out;
}

BraidWord permutation_braid(const Permutation& p) {
  // Peel right descents: p = p' * s_i with length(p') = length(p) - 1.
  std::vector<int> reversed;
  Permutation rest = p;
  while (!rest.is_identity()) {
    for (int i = 1; i < rest.size(); ++i) {
      if (in_finishing_set(rest, i)) {
        reversed.push_back(i);
        rest = rest * Permutation::adjacent_transposition(rest.size(), i);
        break;
      }
    }
  }
  std::reverse(reversed.begin(), reversed.end());
  return BraidWord(p.size(), std::move(reversed));
}

BraidWord half_twist(int strands) { return permutation_braid(Permutation::reversal(strands)); }

GarsideNormalForm left_normal_form(const BraidWord& w) {
  const int n = w.strands();
  const Permutation delta = Permutation::reversal(n);

  int negatives_to_the_right = 0;
  for (int letter : w.letters()) negatives_to_the_right += letter < 0 ? 1 : 0;

  GarsideNormalForm nf;
  nf.strands = n;
  nf.infimum = -negatives_to_the_right;

  // sigma_i^-1 = Delta^-1 * (Delta sigma_i^-1); every Delta^-1 is then pushed
  // to the far left, conjugating each simple factor it passes.
  std::vector<Permutation> factors;
  factors.reserve(w.length());
  for (int letter : w.letters()) {
    const Permutation s = Permutation::adjacent_transposition(n, std::abs(letter));
    Permutation simple = s;
    if (letter < 0) {
      --negatives_to_the_right;
      simple = delta * s;
    }
    if (negatives_to_the_right % 2 != 0) simple = flip(simple);
    factors.push_back(std::move(simple));
    sweep_until_left_weighted(factors);
  }

  // Half twists collect at the front and identities at the back.
  std::size_t first = 0;
  while (first < factors.size() && factors[first] == delta) {
    ++nf.infimum;
    ++first;
  }
  for (std::size_t k = first; k < factors.size(); ++k) {
    if (factors[k].is_identity()) break;
    nf.factors.push_back(factors[k]);
  }
  return nf;
}

bool is_left_weighted(const GarsideNormalForm& nf) {
  const Permutation delta = Permutation::reversal(nf.strands);
  for (std::size_t k = 0; k < nf.factors.size(); ++k) {
    const Permutation& p = nf.factors[k];
    if (p.size() != nf.strands || p.is_identity() || p == delta) return false;
    if (k == 0) continue;
    const Permutation& prev = nf.factors[k - 1];
    for (int i : starting_set(p)) {
      if (!in_finishing_set(prev, i)) return false;
    }
  }
  return true;
}

BraidWord to_word(const GarsideNormalForm& nf) {
  BraidWord out(nf.strands);
  const BraidWord delta = half_twist(nf.strands);
  const BraidWord power = nf.infimum >= 0 ? delta : delta.inverse();
  for (int k = 0; k < std::abs(nf.infimum); ++k) out = out * power;
  for (const auto& p : nf.factors) out = out * permutation_braid(p);
  return out;
}

bool words_equal(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) {
    throw DomainError("cannot compare braids on " + std::to_string(u.strands()) + " and " +
                      std::to_string(v.strands()) + " strands");
  }
  return left_normal_form(u) == left_normal_form(v);
}

}  // namespace braidfgl::braid
