#pragma once

#include <string>
#include <vector>

#include "loco/alphabet.hpp"
#include "loco/bignum.hpp"

namespace loco {

/// Finite set of forbidden patterns over a q-ary alphabet. Patterns are level
/// sequences, leftmost symbol first. A pattern that contains another pattern
/// of the set as a subword is redundant and dropped with a warning.
class ForbiddenSet {
 public:
  ForbiddenSet(Alphabet alphabet, std::vector<std::vector<int>> patterns);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<std::vector<int>>& patterns() const { return patterns_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  int max_pattern_length() const { return p_max_; }

  /// True iff `levels` contains some pattern as a contiguous subword.
  bool hits(const std::vector<int>& levels) const;

 private:
  Alphabet alphabet_;
  std::vector<std::vector<int>> patterns_;
  std::vector<std::string> warnings_;
  int p_max_ = 0;
};

/// Deterministic, complete context automaton over pattern prefixes
/// (failure-link construction). A walk from start() reaches kReject exactly
/// when the consumed word acquires a forbidden pattern; reject is absorbing
/// and excluded from the state set. Immutable after build; safe to share.
class ConstraintAutomaton {
 public:
  static constexpr int kReject = -1;

  static ConstraintAutomaton build(const ForbiddenSet& forbidden);

  int q() const { return q_; }
  int state_count() const { return static_cast<int>(delta_.size()) / q_; }
  int start() const { return 0; }
  int max_pattern_length() const { return p_max_; }

  int next(int state, int level) const { return delta_[state * q_ + level]; }

  bool accepts(const std::vector<int>& levels) const;
  bool accepts(const Word& word) const { return accepts(word.levels()); }

 private:
  ConstraintAutomaton() = default;

  int q_ = 2;
  int p_max_ = 0;
  std::vector<int> delta_;  // state_count x q, kReject = -1
};

/// completions(s, len) = exact number of length-`len` suffixes accepted from
/// state s. completions(start, m) is the code cardinality N_q(m).
class CompletionTable {
 public:
  CompletionTable(const ConstraintAutomaton& automaton, int max_len);

  int max_len() const { return static_cast<int>(by_len_.size()) - 1; }
  const BigInt& completions(int state, int len) const { return by_len_[len][state]; }

 private:
  std::vector<std::vector<BigInt>> by_len_;  // [len][state]
};

}  // namespace loco
