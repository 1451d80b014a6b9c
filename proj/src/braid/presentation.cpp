#include "braidfgl/braid/presentation.hpp"

#include <stdexcept>
#include <string>

#include "braidfgl/error.hpp"

namespace braidfgl::braid {

GroupCode artin_code(int strands) {
  if (strands < 1) throw std::invalid_argument("a braid needs at least one strand");
  GroupCode code;
  code.generator_count = strands - 1;
  for (int i = 1; i < strands; ++i) {
    for (int j = i + 2; j < strands; ++j) {
      code.relators.emplace_back(strands, std::vector<int>{i, j, -i, -j});
    }
  }
  for (int i = 1; i + 1 < strands; ++i) {
    code.relators.emplace_back(strands, std::vector<int>{i, i + 1, i, -(i + 1), -i, -(i + 1)});
  }
  return code;
}

BraidWord insert_relator(const BraidWord& w, const GroupCode& code, const RelatorSplice& splice) {
  if (code.generator_count + 1 != w.strands()) {
    throw DomainError("group code has " + std::to_string(code.generator_count) +
                      " generators but the word lives on " + std::to_string(w.strands()) +
                      " strands");
  }
  if (splice.relator_index >= code.relators.size()) {
    throw std::out_of_range("relator index " + std::to_string(splice.relator_index) +
                            " out of range (code has " + std::to_string(code.relators.size()) +
                            " relators)");
  }
  if (splice.position > w.length()) {
    throw std::out_of_range("insertion position " + std::to_string(splice.position) +
                            " beyond word length " + std::to_string(w.length()));
  }
  BraidWord relator = code.relators[splice.relator_index];
  if (splice.inverted) relator = relator.inverse();
  if (!splice.conjugator.empty()) {
    relator = splice.conjugator * relator * splice.conjugator.inverse();
  }
  const auto letters = w.letters();
  const auto cut = letters.begin() + static_cast<std::ptrdiff_t>(splice.position);
  std::vector<int> out(letters.begin(), cut);
  out.insert(out.end(), relator.letters().begin(), relator.letters().end());
  out.insert(out.end(), cut, letters.end());
  return BraidWord(w.strands(), std::move(out));
}

BraidWord random_word(int strands, std::size_t length, std::mt19937_64& rng) {
  if (strands < 2) return BraidWord(strands);
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::bernoulli_distribution positive(0.5);
  std::vector<int> letters;
  letters.reserve(length);
  while (letters.size() < length) {
    const int letter = positive(rng) ? gen(rng) : -gen(rng);
    if (!letters.empty() && letters.back() == -letter) continue;
    letters.push_back(letter);
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord scramble(const BraidWord& w, int insertions, bool reduce, std::mt19937_64& rng) {
  const GroupCode code = artin_code(w.strands());
  if (code.relators.empty()) return w;
  BraidWord out = w;
  std::uniform_int_distribution<std::size_t> which(0, code.relators.size() - 1);
  std::uniform_int_distribution<std::size_t> conj_len(0, 3);
  std::bernoulli_distribution coin(0.5);
  for (int k = 0; k < insertions; ++k) {
    RelatorSplice splice;
    splice.relator_index = which(rng);
    splice.position = std::uniform_int_distribution<std::size_t>(0, out.length())(rng);
    splice.inverted = coin(rng);
    splice.conjugator = random_word(w.strands(), conj_len(rng), rng);
    out = insert_relator(out, code, splice);
  }
  return reduce ? free_reduce(out) : out;
}

}  // namespace braidfgl::braid
