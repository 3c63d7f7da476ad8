#pragma once

#include <random>
#include <vector>

#include "loco/alphabet.hpp"
#include "loco/bignum.hpp"

namespace loco::test {

// Direct-definition oracle: every length-m word over {0..q-1}, filtered by a
// plain substring scan. Deliberately independent of the automaton path.
inline bool scan_hits(const std::vector<int>& word, const std::vector<std::vector<int>>& patterns) {
  for (const auto& p : patterns) {
    if (p.size() > word.size()) continue;
    for (std::size_t k = 0; k + p.size() <= word.size(); ++k) {
      bool match = true;
      for (std::size_t j = 0; j < p.size() && match; ++j) match = word[k + j] == p[j];
      if (match) return true;
    }
  }
  return false;
}

inline std::vector<std::vector<int>> brute_words(int q, int m,
                                                 const std::vector<std::vector<int>>& patterns) {
  std::vector<std::vector<int>> out;
  std::vector<int> word(static_cast<std::size_t>(m), 0);
  while (true) {
    if (!scan_hits(word, patterns)) out.push_back(word);
    int pos = m - 1;
    while (pos >= 0 && word[static_cast<std::size_t>(pos)] == q - 1) {
      word[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++word[static_cast<std::size_t>(pos)];
  }
  return out;
}

inline Bits random_bits(std::mt19937_64& rng, int n) {
  Bits bits(static_cast<std::size_t>(n));
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1);
  return bits;
}

}  // namespace loco::test
