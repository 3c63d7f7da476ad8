#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "loco/config.hpp"
#include "loco/families.hpp"
#include "loco/indexing.hpp"

using namespace loco;
using test::brute_words;
using test::scan_hits;

namespace {

Word word_of(int q, const std::string& text) { return Word::from_string(Alphabet(q), text); }

}  // namespace

TEST_CASE("automaton: unconstrained set is a single self-looping state") {
  ForbiddenSet none(Alphabet(2), {});
  auto a = ConstraintAutomaton::build(none);
  CHECK(a.state_count() == 1);
  CHECK(a.next(0, 0) == 0);
  CHECK(a.next(0, 1) == 0);
  CHECK(count_words(a, 2) == 4);
  CHECK(count_words(ConstraintAutomaton::build(ForbiddenSet(Alphabet(8), {})), 2) == 64);
}

TEST_CASE("automaton acceptance equals a direct substring scan") {
  ForbiddenSet t11(Alphabet(2), {{1, 1}});
  auto a = ConstraintAutomaton::build(t11);
  CHECK(a.accepts(word_of(2, "10101")));
  CHECK_FALSE(a.accepts(word_of(2, "0110")));

  // randomized agreement across random pattern sets
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    int q = 2 + static_cast<int>(rng() % 3);
    std::vector<std::vector<int>> patterns;
    for (int p = 0; p < 3; ++p) {
      std::vector<int> pat(1 + rng() % 3);
      for (auto& v : pat) v = static_cast<int>(rng() % static_cast<unsigned>(q));
      if (std::find(patterns.begin(), patterns.end(), pat) == patterns.end()) {
        patterns.push_back(pat);
      }
    }
    auto automaton = ConstraintAutomaton::build(ForbiddenSet(Alphabet(q), patterns));
    for (int w = 0; w < 50; ++w) {
      std::vector<int> levels(8);
      for (auto& v : levels) v = static_cast<int>(rng() % static_cast<unsigned>(q));
      CHECK(automaton.accepts(levels) == !scan_hits(levels, patterns));
    }
  }
}

TEST_CASE("automaton state count stays within the prefix bound") {
  auto codec = FamilyCodec::make(Family::OpLoco, 5);
  auto a = ConstraintAutomaton::build(codec.forbidden());
  int bound = 1;
  for (const auto& p : codec.forbidden().patterns()) bound += static_cast<int>(p.size());
  CHECK(a.state_count() <= bound);
}

TEST_CASE("redundant patterns are dropped with a warning") {
  ForbiddenSet t(Alphabet(2), {{1, 1}, {1, 1, 0}});
  CHECK(t.patterns().size() == 1);
  REQUIRE(t.warnings().size() == 1);
  auto with = ConstraintAutomaton::build(t);
  auto without = ConstraintAutomaton::build(ForbiddenSet(Alphabet(2), {{1, 1}}));
  for (int m = 0; m <= 10; ++m) CHECK(count_words(with, m) == count_words(without, m));

  CHECK_THROWS_AS(ForbiddenSet(Alphabet(2), {{1, 1}, {1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(ForbiddenSet(Alphabet(2), {{}}), std::invalid_argument);
  CHECK_THROWS_AS(ForbiddenSet(Alphabet(2), {{2}}), std::invalid_argument);
}

TEST_CASE("counts match brute force and the paper goldens") {
  auto lorll = FamilyCodec::make(Family::LoRll, 1, 5);
  auto a = ConstraintAutomaton::build(lorll.forbidden());
  CHECK(count_words(a, 5) == 13);  // N_2(5,1)

  auto os = ConstraintAutomaton::build(FamilyCodec::make(Family::OsLoco, 3).forbidden());
  CHECK(count_words(os, 3) == 510);  // 8^3 - 2

  auto op_codec = FamilyCodec::make(Family::OpLoco, 6);
  auto op = ConstraintAutomaton::build(op_codec.forbidden());
  for (int m = 1; m <= 6; ++m) {
    auto brute = brute_words(8, m, op_codec.forbidden().patterns());
    CHECK(count_words(op, m) == brute.size());
  }
}

TEST_CASE("completion table start row equals the closed-form recursions, m <= 20") {
  struct Case {
    Family family;
    int param;
  };
  for (auto c : {Case{Family::LoRll, 1}, Case{Family::LoRll, 3}, Case{Family::SLoco, 2},
                 Case{Family::OsLoco, 1}, Case{Family::OpLoco, 1}, Case{Family::NsLoco, 1},
                 Case{Family::NpLoco, 1}}) {
    auto codec = FamilyCodec::make(c.family, c.param, 20);
    auto a = ConstraintAutomaton::build(codec.forbidden());
    CompletionTable table(a, 20);
    for (int m = 1; m <= 20; ++m) {
      CHECK(count_words(a, table, m) == to_integer(codec.cardinality(m)));
    }
  }
}

TEST_CASE("enumerate: goldens and the safety cap") {
  auto lorll = ConstraintAutomaton::build(FamilyCodec::make(Family::LoRll, 1, 3).forbidden());
  std::vector<Word> expect = {word_of(2, "000"), word_of(2, "001"), word_of(2, "010"),
                              word_of(2, "100"), word_of(2, "101")};
  CHECK(enumerate_words(lorll, 3) == expect);

  auto sloco = ConstraintAutomaton::build(FamilyCodec::make(Family::SLoco, 2, 4).forbidden());
  std::vector<std::string> table2 = {"0000", "0001", "0011", "0111",
                                     "1000", "1100", "1110", "1111"};
  auto words = enumerate_words(sloco, 4);
  REQUIRE(words.size() == 8);
  for (std::size_t k = 0; k < words.size(); ++k) CHECK(words[k].to_string() == table2[k]);

  auto none = ConstraintAutomaton::build(ForbiddenSet(Alphabet(2), {}));
  auto all2 = enumerate_words(none, 2);
  CHECK(all2 == std::vector<Word>{word_of(2, "00"), word_of(2, "01"), word_of(2, "10"),
                                  word_of(2, "11")});

  auto os = ConstraintAutomaton::build(FamilyCodec::make(Family::OsLoco, 1).forbidden());
  CHECK_THROWS_AS(enumerate_words(os, 9), std::length_error);  // 8^9 > 2^24
}

TEST_CASE("rank: worked examples and error paths") {
  auto lorll = ConstraintAutomaton::build(FamilyCodec::make(Family::LoRll, 1, 5).forbidden());
  CompletionTable lt(lorll, 5);
  CHECK(rank(lorll, lt, word_of(2, "10101")) == 12);
  CHECK(rank(lorll, lt, word_of(2, "00000")) == 0);
  CHECK_THROWS_AS(rank(lorll, lt, word_of(2, "00011")), std::invalid_argument);

  auto sloco = ConstraintAutomaton::build(FamilyCodec::make(Family::SLoco, 2, 5).forbidden());
  CompletionTable st(sloco, 5);
  CHECK(rank(sloco, st, word_of(2, "01111")) == 5);
}

TEST_CASE("unrank: worked examples, bounds, bijection") {
  auto os = ConstraintAutomaton::build(FamilyCodec::make(Family::OsLoco, 5).forbidden());
  CompletionTable ot(os, 5);
  CHECK(unrank(os, ot, 0, 5) == word_of(8, "00000"));
  CHECK(unrank(os, ot, 1448, 5) == word_of(8, "02765"));

  auto np = ConstraintAutomaton::build(FamilyCodec::make(Family::NpLoco, 6).forbidden());
  CompletionTable nt(np, 6);
  CHECK(unrank(np, nt, 1208, 6) == word_of(4, "132312"));
  CHECK_THROWS_AS(unrank(np, nt, count_words(np, nt, 6), 6), std::out_of_range);
  CHECK_THROWS_AS(unrank(np, nt, -1, 6), std::out_of_range);

  // rank(enumerate[k]) == k, unrank(rank) identity, strict monotonicity
  auto words = enumerate_words(np, 5);
  CompletionTable nt5(np, 5);
  CHECK(words.size() == 712);
  for (std::size_t k = 0; k < words.size(); ++k) {
    CHECK(rank(np, nt5, words[k]) == k);
    CHECK(unrank(np, nt5, BigInt(k), 5) == words[k]);
    if (k > 0) CHECK(lex_compare(words[k - 1], words[k]) == std::strong_ordering::less);
  }
}

TEST_CASE("constraint config parsing") {
  auto set = parse_constraint_config(R"({ "q": 8, "patterns": [[0,2,0],[7,5,7]] })");
  CHECK(set.alphabet().q == 8);
  REQUIRE(set.patterns().size() == 2);
  CHECK(set.patterns()[0] == std::vector<int>{0, 2, 0});
  CHECK(set.patterns()[1] == std::vector<int>{7, 5, 7});

  CHECK_THROWS_AS(parse_constraint_config("not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_constraint_config(R"({ "q": 8 })"), std::invalid_argument);
  CHECK_THROWS_AS(parse_constraint_config(R"({ "q": 8, "patterns": [[9]] })"),
                  std::invalid_argument);
}
