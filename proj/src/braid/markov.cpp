#include "braidfgl/braid/markov.hpp"

#include <cstdlib>
#include <sstream>
#include <string>

#include "braidfgl/error.hpp"

namespace braidfgl::braid {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

BraidWord destabilize(const BraidWord& w) {
  const int n = w.strands();
  if (n < 2) throw DomainError("cannot destabilize a braid on one strand");
  const BraidWord reduced = free_reduce(w);
  const auto letters = reduced.letters();
  if (letters.empty() || std::abs(letters.back()) != n - 1) {
    throw DomainError("destabilize: word does not end in sigma_" + std::to_string(n - 1) +
                      "^+-1");
  }
  std::ostringstream offending;
  bool clean = true;
  for (std::size_t k = 0; k + 1 < letters.size(); ++k) {
    if (std::abs(letters[k]) == n - 1) {
      offending << (clean ? "" : ", ") << letters[k] << " at position " << k;
      clean = false;
    }
  }
  if (!clean) {
    throw DomainError("destabilize: generator " + std::to_string(n - 1) +
                      " also occurs before the last letter: " + offending.str());
  }
  return BraidWord(n - 1, std::vector<int>(letters.begin(), letters.end() - 1));
}

}  // namespace

BraidWord markov_move(const BraidWord& w, const MarkovMove& move) {
  return std::visit(
      overloaded{
          [&](const Conjugate& c) { return c.by * w * c.by.inverse(); },
          [&](const Stabilize& s) {
            if (s.sign != 1 && s.sign != -1) throw DomainError("stabilization sign must be +1 or -1");
            std::vector<int> letters(w.letters().begin(), w.letters().end());
            letters.push_back(s.sign * w.strands());
            return BraidWord(w.strands() + 1, std::move(letters));
          },
          [&](const Destabilize&) { return destabilize(w); },
      },
      move);
}

ClosureSummary closure_summary(const BraidWord& w) {
  return {permutation_of(w).cycle_count(), w.exponent_sum(), w.strands()};
}

BraidCobordism braid_cobordism(const BraidWord& w) {
  BraidCobordism c;
  c.intervals = w.strands();
  c.permutation = permutation_of(w);
  for (int i = 1; i <= w.strands(); ++i) {
    c.top.push_back({i, 0, 1});
    c.bottom.push_back({c.permutation(i), 0, 0});
  }
  return c;
}

}  // namespace braidfgl::braid
