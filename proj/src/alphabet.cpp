#include "loco/alphabet.hpp"

#include <stdexcept>

namespace loco {

Alphabet::Alphabet(int size) : q(size) {
  if (q < 2) throw std::invalid_argument("alphabet size must be >= 2");
}

std::string symbol_label(int level) {
  if (level < 0) throw std::invalid_argument("negative level");
  if (level == 0) return "0";
  if (level == 1) return "1";
  if (level == 2) return "a";
  return "a" + std::to_string(level - 1);
}

int level_from_label(const std::string& label, const Alphabet& alphabet) {
  int level;
  if (label == "0") {
    level = 0;
  } else if (label == "1") {
    level = 1;
  } else if (label == "a") {
    level = 2;
  } else if (label.size() >= 2 && label[0] == 'a') {
    level = std::stoi(label.substr(1)) + 1;
  } else {
    throw std::invalid_argument("unknown symbol label '" + label + "'");
  }
  if (level >= alphabet.q) throw std::invalid_argument("label '" + label + "' not in alphabet");
  return level;
}

char symbol_char(int level) {
  if (level < 0 || level > 9) throw std::invalid_argument("single-character rendering needs q <= 10");
  return static_cast<char>('0' + level);
}

int level_from_char(char c, const Alphabet& alphabet) {
  if (c < '0' || c > '9') throw std::invalid_argument(std::string("invalid symbol character '") + c + "'");
  int level = c - '0';
  if (level >= alphabet.q) {
    throw std::invalid_argument(std::string("symbol '") + c + "' not in alphabet");
  }
  return level;
}

Word::Word(Alphabet alphabet, std::vector<int> levels_msb_first)
    : alphabet_(alphabet), levels_(std::move(levels_msb_first)) {
  for (int v : levels_) {
    if (v < 0 || v >= alphabet_.q) throw std::invalid_argument("symbol level out of range");
  }
}

Word Word::from_string(Alphabet alphabet, const std::string& text) {
  std::vector<int> levels;
  levels.reserve(text.size());
  for (char c : text) levels.push_back(level_from_char(c, alphabet));
  return Word(alphabet, std::move(levels));
}

std::optional<int> Word::at(int i) const {
  if (i < 0) throw std::invalid_argument("negative significance index");
  if (i >= length()) return std::nullopt;  // z'
  return levels_[static_cast<std::size_t>(length() - 1 - i)];
}

std::string Word::to_string() const {
  std::string s;
  s.reserve(levels_.size());
  for (int v : levels_) s.push_back(symbol_char(v));
  return s;
}

std::strong_ordering lex_compare(const Word& u, const Word& v) {
  if (u.alphabet() != v.alphabet()) throw std::invalid_argument("lex_compare: alphabet mismatch");
  if (u.length() != v.length()) throw std::invalid_argument("lex_compare: length mismatch");
  return u.levels() <=> v.levels();
}

}  // namespace loco
