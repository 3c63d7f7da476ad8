#include "loco/constraint.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace loco {
namespace {

bool contains_subword(const std::vector<int>& haystack, const std::vector<int>& needle) {
  if (needle.size() > haystack.size()) return false;
  return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end()) !=
         haystack.end();
}

std::string pattern_text(const std::vector<int>& pattern) {
  std::string s;
  for (int v : pattern) s += std::to_string(v) + ".";
  if (!s.empty()) s.pop_back();
  return s;
}

}  // namespace

ForbiddenSet::ForbiddenSet(Alphabet alphabet, std::vector<std::vector<int>> patterns)
    : alphabet_(alphabet) {
  std::set<std::vector<int>> seen;
  for (const auto& p : patterns) {
    if (p.empty()) throw std::invalid_argument("forbidden pattern must be nonempty");
    for (int v : p) {
      if (v < 0 || v >= alphabet_.q) {
        throw std::invalid_argument("forbidden pattern symbol out of range");
      }
    }
    if (!seen.insert(p).second) {
      throw std::invalid_argument("duplicate forbidden pattern " + pattern_text(p));
    }
  }
  // A pattern containing another pattern as a subword can never fire first;
  // keep counts correct by dropping it, but surface the input issue.
  for (const auto& p : patterns) {
    bool redundant = false;
    for (const auto& other : patterns) {
      if (&other == &p || other.size() > p.size()) continue;
      if (contains_subword(p, other) && other != p) {
        redundant = true;
        warnings_.push_back("pattern " + pattern_text(p) + " contains pattern " +
                            pattern_text(other) + " and was dropped as redundant");
        break;
      }
    }
    if (!redundant) {
      patterns_.push_back(p);
      p_max_ = std::max(p_max_, static_cast<int>(p.size()));
    }
  }
}

bool ForbiddenSet::hits(const std::vector<int>& levels) const {
  for (const auto& p : patterns_) {
    if (contains_subword(levels, p)) return true;
  }
  return false;
}

ConstraintAutomaton ConstraintAutomaton::build(const ForbiddenSet& forbidden) {
  const int q = forbidden.alphabet().q;

  struct Node {
    std::vector<int> children;  // -1 = absent
    int fail = 0;
    bool terminal = false;
  };
  std::vector<Node> trie(1, Node{std::vector<int>(static_cast<std::size_t>(q), -1), 0, false});

  for (const auto& pattern : forbidden.patterns()) {
    int u = 0;
    for (int level : pattern) {
      int& slot = trie[static_cast<std::size_t>(u)].children[static_cast<std::size_t>(level)];
      if (slot < 0) {
        slot = static_cast<int>(trie.size());
        trie.push_back(Node{std::vector<int>(static_cast<std::size_t>(q), -1), 0, false});
      }
      u = slot;
    }
    trie[static_cast<std::size_t>(u)].terminal = true;
  }

  // Failure links + full goto function (BFS). Normalization guarantees no
  // proper prefix of a kept pattern ends with another kept pattern, so
  // terminals are leaves and the only rejecting targets.
  std::vector<std::vector<int>> go(trie.size(), std::vector<int>(static_cast<std::size_t>(q), 0));
  std::queue<int> bfs;
  for (int c = 0; c < q; ++c) {
    int v = trie[0].children[static_cast<std::size_t>(c)];
    if (v < 0) {
      go[0][static_cast<std::size_t>(c)] = 0;
    } else {
      go[0][static_cast<std::size_t>(c)] = v;
      trie[static_cast<std::size_t>(v)].fail = 0;
      bfs.push(v);
    }
  }
  while (!bfs.empty()) {
    int u = bfs.front();
    bfs.pop();
    auto& node = trie[static_cast<std::size_t>(u)];
    node.terminal = node.terminal || trie[static_cast<std::size_t>(node.fail)].terminal;
    for (int c = 0; c < q; ++c) {
      int v = node.children[static_cast<std::size_t>(c)];
      int via_fail = go[static_cast<std::size_t>(node.fail)][static_cast<std::size_t>(c)];
      if (v < 0) {
        go[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)] = via_fail;
      } else {
        go[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)] = v;
        trie[static_cast<std::size_t>(v)].fail = via_fail;
        bfs.push(v);
      }
    }
  }

  // Non-terminal nodes become states; entering a terminal is the reject.
  std::vector<int> state_id(trie.size(), kReject);
  int n = 0;
  for (std::size_t u = 0; u < trie.size(); ++u) {
    if (!trie[u].terminal) state_id[u] = n++;
  }

  ConstraintAutomaton a;
  a.q_ = q;
  a.p_max_ = forbidden.max_pattern_length();
  a.delta_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(q), kReject);
  for (std::size_t u = 0; u < trie.size(); ++u) {
    if (state_id[u] == kReject) continue;
    for (int c = 0; c < q; ++c) {
      int v = go[u][static_cast<std::size_t>(c)];
      a.delta_[static_cast<std::size_t>(state_id[u]) * static_cast<std::size_t>(q) +
               static_cast<std::size_t>(c)] = state_id[static_cast<std::size_t>(v)];
    }
  }
  return a;
}

bool ConstraintAutomaton::accepts(const std::vector<int>& levels) const {
  int state = start();
  for (int level : levels) {
    if (level < 0 || level >= q_) throw std::invalid_argument("symbol level out of range");
    state = next(state, level);
    if (state == kReject) return false;
  }
  return true;
}

CompletionTable::CompletionTable(const ConstraintAutomaton& automaton, int max_len) {
  if (max_len < 0) throw std::invalid_argument("completion table length must be >= 0");
  const int n = automaton.state_count();
  const int q = automaton.q();
  by_len_.resize(static_cast<std::size_t>(max_len) + 1);
  by_len_[0].assign(static_cast<std::size_t>(n), BigInt(1));
  for (int len = 1; len <= max_len; ++len) {
    auto& row = by_len_[static_cast<std::size_t>(len)];
    const auto& prev = by_len_[static_cast<std::size_t>(len - 1)];
    row.assign(static_cast<std::size_t>(n), BigInt(0));
    for (int s = 0; s < n; ++s) {
      BigInt total = 0;
      for (int c = 0; c < q; ++c) {
        int t = automaton.next(s, c);
        if (t != ConstraintAutomaton::kReject) total += prev[static_cast<std::size_t>(t)];
      }
      row[static_cast<std::size_t>(s)] = std::move(total);
    }
  }
}

}  // namespace loco
