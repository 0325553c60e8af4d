#pragma once

// Random generators for property tests.  Seeds are fixed so failures replay.

#include <random>
#include <vector>

#include "sbraid/smith.hpp"
#include "sbraid/word.hpp"

namespace sbraid::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline RawWord random_letters(Rng& rng, const std::vector<GeneratorId>& alphabet, int max_len) {
  RawWord w;
  int len = uniform(rng, 0, max_len);
  for (int i = 0; i < len; ++i) {
    const auto& x = alphabet[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(alphabet.size()) - 1))];
    w.push_back({x, uniform(rng, 0, 1) ? 1 : -1});
  }
  return w;
}

inline Word random_word(Rng& rng, const std::vector<GeneratorId>& alphabet, int max_len) {
  return Word(random_letters(rng, alphabet, max_len));
}

inline std::vector<GeneratorId> free_alphabet(int m) {
  std::vector<GeneratorId> out;
  for (int i = 1; i <= m; ++i) out.push_back(GeneratorId::x(i));
  return out;
}

// Entries in [-bound, bound]; about a third of them zero so that rank
// deficiency and nontrivial torsion both show up.
inline IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (uniform(rng, 0, 2) != 0) m(i, j) = uniform(rng, -bound, bound);
  return m;
}

}  // namespace sbraid::testing
