#include <algorithm>
#include <random>

#include "doctest.h"
#include "loco/alphabet.hpp"

using namespace loco;

TEST_CASE("lexicographic comparison") {
  Alphabet b2(2);
  CHECK(lex_compare(Word::from_string(b2, "0101"), Word::from_string(b2, "0101")) ==
        std::strong_ordering::equal);
  CHECK(lex_compare(Word::from_string(b2, "00010"), Word::from_string(b2, "00100")) ==
        std::strong_ordering::less);

  Alphabet g8(8);
  // first-symbol dominance: 0 a a6 ... < 1 ...
  CHECK(lex_compare(Word(g8, {0, 2, 7}), Word(g8, {1, 0, 0})) == std::strong_ordering::less);

  CHECK_THROWS_AS(lex_compare(Word(b2, {0}), Word(b2, {0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(lex_compare(Word(b2, {0}), Word(g8, {0})), std::invalid_argument);
}

TEST_CASE("sorting by lex_compare equals sorting by level vectors") {
  std::mt19937_64 rng(7);
  Alphabet g4(4);
  std::vector<Word> words;
  for (int k = 0; k < 200; ++k) {
    std::vector<int> levels(6);
    for (auto& v : levels) v = static_cast<int>(rng() % 4);
    words.emplace_back(g4, levels);
  }
  auto by_word = words;
  std::sort(by_word.begin(), by_word.end(),
            [](const Word& u, const Word& v) { return lex_compare(u, v) < 0; });
  auto by_levels = words;
  std::sort(by_levels.begin(), by_levels.end(),
            [](const Word& u, const Word& v) { return u.levels() < v.levels(); });
  CHECK(by_word == by_levels);
}

TEST_CASE("level map and labels") {
  Alphabet g8(8);
  CHECK(level_from_label("0", g8) == 0);
  CHECK(level_from_label("a", g8) == 2);   // 0 a 0 has level pattern 020
  CHECK(level_from_label("a6", g8) == 7);  // a6 a4 a6 -> 757
  CHECK(symbol_label(7) == "a6");
  for (int level = 0; level < 8; ++level) {
    CHECK(level_from_label(symbol_label(level), g8) == level);
    CHECK(level_from_char(symbol_char(level), g8) == level);
  }
  CHECK_THROWS_AS(level_from_label("a7", g8), std::invalid_argument);
  CHECK_THROWS_AS(level_from_char('9', Alphabet(4)), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet(1), std::invalid_argument);
}

TEST_CASE("word significance indexing and the z' sentinel") {
  Alphabet g8(8);
  Word w(g8, {0, 2, 7, 6, 5});  // c_4 c_3 c_2 c_1 c_0
  CHECK(w.length() == 5);
  CHECK(w.at(4) == 0);
  CHECK(w.at(0) == 5);
  CHECK(w.at(5) == std::nullopt);
  CHECK(w.at(100) == std::nullopt);
  CHECK_THROWS_AS(w.at(-1), std::invalid_argument);
  CHECK(w.to_string() == "02765");
  CHECK(Word::from_string(g8, "02765") == w);
  CHECK_THROWS_AS(Word(g8, {8}), std::invalid_argument);
}
