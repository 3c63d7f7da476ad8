#include "loco/indexing.hpp"

#include <stdexcept>

namespace loco {

BigInt count_words(const ConstraintAutomaton& automaton, const CompletionTable& table, int m) {
  if (m < 0) throw std::invalid_argument("word length must be >= 0");
  if (table.max_len() < m) throw std::invalid_argument("completion table too short");
  return table.completions(automaton.start(), m);
}

BigInt count_words(const ConstraintAutomaton& automaton, int m) {
  if (m < 0) throw std::invalid_argument("word length must be >= 0");
  return count_words(automaton, CompletionTable(automaton, m), m);
}

namespace {

void enumerate_rec(const ConstraintAutomaton& a, int state, int remaining, std::vector<int>& prefix,
                   std::vector<Word>& out, const Alphabet& alphabet) {
  if (remaining == 0) {
    out.emplace_back(alphabet, prefix);
    return;
  }
  for (int c = 0; c < a.q(); ++c) {
    int t = a.next(state, c);
    if (t == ConstraintAutomaton::kReject) continue;
    prefix.push_back(c);
    enumerate_rec(a, t, remaining - 1, prefix, out, alphabet);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Word> enumerate_words(const ConstraintAutomaton& automaton, int m,
                                  std::uint64_t candidate_cap) {
  if (m < 0) throw std::invalid_argument("word length must be >= 0");
  BigInt candidates = pow(BigInt(automaton.q()), static_cast<unsigned>(m));
  if (candidates > candidate_cap) {
    throw std::length_error("enumeration candidate space q^m exceeds the safety cap");
  }
  std::vector<Word> out;
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(m));
  enumerate_rec(automaton, automaton.start(), m, prefix, out, Alphabet(automaton.q()));
  return out;
}

BigInt rank(const ConstraintAutomaton& automaton, const CompletionTable& table, const Word& word) {
  const int m = word.length();
  if (word.alphabet().q != automaton.q()) throw std::invalid_argument("rank: alphabet mismatch");
  if (table.max_len() < m) throw std::invalid_argument("rank: completion table too short");
  BigInt g = 0;
  int state = automaton.start();
  for (int i = m - 1; i >= 0; --i) {
    const int level = *word.at(i);
    for (int c = 0; c < level; ++c) {
      int t = automaton.next(state, c);
      if (t != ConstraintAutomaton::kReject) g += table.completions(t, i);
    }
    state = automaton.next(state, level);
    if (state == ConstraintAutomaton::kReject) {
      throw std::invalid_argument("rank: word contains a forbidden pattern");
    }
  }
  return g;
}

Word unrank(const ConstraintAutomaton& automaton, const CompletionTable& table, const BigInt& g,
            int m) {
  if (m < 0) throw std::invalid_argument("word length must be >= 0");
  if (table.max_len() < m) throw std::invalid_argument("unrank: completion table too short");
  if (g < 0 || g >= count_words(automaton, table, m)) {
    throw std::out_of_range("unrank: index outside [0, N)");
  }
  BigInt residual = g;
  std::vector<int> levels;
  levels.reserve(static_cast<std::size_t>(m));
  int state = automaton.start();
  for (int i = m - 1; i >= 0; --i) {
    int chosen = -1;
    for (int c = 0; c < automaton.q(); ++c) {
      int t = automaton.next(state, c);
      if (t == ConstraintAutomaton::kReject) continue;
      const BigInt& n = table.completions(t, i);
      if (residual < n) {
        chosen = c;
        state = t;
        break;
      }
      residual -= n;
    }
    if (chosen < 0) throw std::logic_error("unrank: residual not exhausted");  // unreachable
    levels.push_back(chosen);
  }
  return Word(Alphabet(automaton.q()), std::move(levels));
}

}  // namespace loco
