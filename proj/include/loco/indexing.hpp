#pragma once

#include <cstdint>
#include <vector>

#include "loco/bignum.hpp"
#include "loco/constraint.hpp"

namespace loco {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

/// Exact number of length-m words avoiding the constraint.
BigInt count_words(const ConstraintAutomaton& automaton, int m);
BigInt count_words(const ConstraintAutomaton& automaton, const CompletionTable& table, int m);

/// All length-m codewords in lexicographic order. Refuses to run when the
/// candidate space q^m exceeds `candidate_cap`.
std::vector<Word> enumerate_words(const ConstraintAutomaton& automaton, int m,
                                  std::uint64_t candidate_cap = kDefaultEnumerationCap);

/// Lexicographic index of `word` among all codewords of its length
/// (Cover's formula: sum completion counts of the strictly smaller,
/// non-rejected branches along the walk). Throws if `word` hits the
/// constraint. Requires table.max_len() >= word.length().
BigInt rank(const ConstraintAutomaton& automaton, const CompletionTable& table, const Word& word);

/// Inverse of rank: greedy residual reduction over levels. Requires
/// 0 <= g < count_words(m).
Word unrank(const ConstraintAutomaton& automaton, const CompletionTable& table, const BigInt& g,
            int m);

}  // namespace loco
