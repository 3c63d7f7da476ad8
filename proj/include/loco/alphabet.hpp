#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace loco {

/// q-ary alphabet {0, 1, a, a^2, ..., a^(q-2)} ordered by integer level:
/// level(0) = 0, level(a^k) = k+1.
struct Alphabet {
  int q;

  explicit Alphabet(int size);
  friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

/// Display label for a level: "0", "1", "a", "a2", ...
std::string symbol_label(int level);
int level_from_label(const std::string& label, const Alphabet& alphabet);

/// One-character rendering, valid for q <= 10. 'z' is reserved for the
/// no-write symbol at the stream layer and never names a level.
char symbol_char(int level);
int level_from_char(char c, const Alphabet& alphabet);

/// Fixed-length word c_{m-1} c_{m-2} ... c_0, stored leftmost-first.
/// Significance indexing follows the usual convention: position i carries
/// weight q^i, i = m-1 is the leftmost symbol.
class Word {
 public:
  Word(Alphabet alphabet, std::vector<int> levels_msb_first);
  static Word from_string(Alphabet alphabet, const std::string& text);

  int length() const { return static_cast<int>(levels_.size()); }
  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<int>& levels() const { return levels_; }

  /// Symbol at significance i. Out-of-bounds access (i >= length) yields the
  /// sentinel z' as nullopt, never a level.
  std::optional<int> at(int i) const;

  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  Alphabet alphabet_;
  std::vector<int> levels_;
};

/// Lexicographic order: first differing position from the left decides,
/// levels compared as integers. Requires equal lengths and alphabets.
std::strong_ordering lex_compare(const Word& u, const Word& v);

}  // namespace loco
