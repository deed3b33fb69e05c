#include <doctest.h>

#include <set>

#include "heckefill/insertion.hpp"
#include "heckefill/json_io.hpp"
#include "heckefill/kknuth.hpp"
#include "test_helpers.hpp"

using namespace heckefill;

TEST_CASE("single insertions from the worked fixture") {
  Json fx = loadFixture("insertion_worked_examples.json");
  IncreasingTableau y = increasingTableauFromJson(fx["tableau"]);
  for (const auto& c : fx["cases"]) {
    InsertionResult got = heckeInsert(y, c["letter"].get<int>());
    CHECK(got.tableau == increasingTableauFromJson(c["result"]));
    CHECK(got.corner.row == c["corner"][0].get<int>());
    CHECK(got.corner.col == c["corner"][1].get<int>());
    CHECK(got.alpha == c["alpha"].get<int>());
  }
}

TEST_CASE("insert into empty tableau") {
  InsertionResult r = heckeInsert(IncreasingTableau(), 7);
  CHECK(r.tableau == IncreasingTableau(std::vector<std::vector<int>>{{7}}));
  CHECK(r.corner == Cell{1, 1});
  CHECK(r.alpha == 1);
  auto [y, x] = reverseHeckeInsert(r.tableau, {1, 1}, 1);
  CHECK(y.empty());
  CHECK(x == 7);
}

TEST_CASE("reverse insertion rejects bad input") {
  IncreasingTableau z({{1, 2}, {2, 3}});
  CHECK_THROWS_WITH_AS(reverseHeckeInsert(z, {1, 2}, 0),
                       doctest::Contains("not a corner"),
                       std::invalid_argument);
  CHECK_THROWS_AS(reverseHeckeInsert(z, {2, 2}, 2), std::invalid_argument);
  // a shape-matched pair whose recording order is inconsistent
  HeckePair scrambled{IncreasingTableau({{1, 2}, {2, 3}}),
                      SetValuedTableau({{{2}, {3, 4}}, {{1, 5}, {6}}})};
  CHECK_THROWS_WITH_AS(recoverWord(scrambled),
                       doctest::Contains("unrecoverable pair"),
                       std::invalid_argument);
}

TEST_CASE("reverse insertion round-trips exhaustively") {
  // every increasing tableau inside 3x3 with entries <= 4, every letter <= 4
  auto all = testing::allIncreasingTableaux(3, 3, 4);
  int checked = 0;
  for (const auto& y : all)
    for (int x = 1; x <= 4; ++x) {
      InsertionResult fwd = heckeInsert(y, x);
      auto [back, letter] = reverseHeckeInsert(fwd.tableau, fwd.corner,
                                               fwd.alpha);
      if (!(back == y && letter == x)) {
        CAPTURE(y.str());
        CAPTURE(x);
        REQUIRE(back == y);
        REQUIRE(letter == x);
      }
      ++checked;
    }
  CHECK(checked == static_cast<int>(all.size()) * 4);
}

TEST_CASE("word correspondence fixtures") {
  for (const char* name : {"word_pq_32412143.json", "word_pq_213312.json"}) {
    Json fx = loadFixture(name);
    Word w = fx["word"].get<Word>();
    HeckePair pair = insertWord(w);
    CHECK(pair.p == increasingTableauFromJson(fx["P"]));
    CHECK(pair.q == setValuedTableauFromJson(fx["Q"]));
    CHECK(recoverWord(pair) == w);
  }
  Json fx = loadFixture("word_pq_32412143.json");
  CHECK(readingWord(insertWord(fx["word"].get<Word>()).p) ==
        fx["reading_word"].get<Word>());
}

TEST_CASE("empty and singleton words") {
  HeckePair empty = insertWord({});
  CHECK(empty.p.empty());
  CHECK(empty.q.empty());
  CHECK(recoverWord(empty).empty());
  HeckePair single = insertWord({5});
  CHECK(single.p == IncreasingTableau(std::vector<std::vector<int>>{{5}}));
  CHECK(recoverWord(single) == Word{5});
  CHECK(lisLdsViaTableau({}) == std::pair<int, int>{0, 0});
}

TEST_CASE("insert/recover round-trips and Q validity exhaustively") {
  // all words of length <= 6 over {1..4}
  testing::forAllWords(6, 4, [](const Word& w) {
    HeckePair pair = insertWord(w);
    REQUIRE_FALSE(pair.p.validate().has_value());
    REQUIRE_FALSE(pair.q.validateAsRecording().has_value());
    REQUIRE(pair.p.shape() == pair.q.shape());
    // content bounds
    CHECK(pair.p.maxEntry() <= (w.empty() ? 0 : *std::max_element(
                                                    w.begin(), w.end())));
    CHECK(pair.p.shape().cells() <= static_cast<int>(w.size()));
    Word back = recoverWord(pair);
    if (back != w) {
      CAPTURE(wordStr(w));
      REQUIRE(back == w);
    }
  });
}

TEST_CASE("shape growth under insertion") {
  auto all = testing::allIncreasingTableaux(3, 3, 4);
  for (const auto& y : all)
    for (int x = 1; x <= 4; ++x) {
      InsertionResult r = heckeInsert(y, x);
      CHECK(r.tableau.shape().contains(y.shape()));
      CHECK(r.tableau.shape().cells() - y.shape().cells() == r.alpha);
      bool outside = !(y.shape().part(r.corner.row) >= r.corner.col);
      CHECK(outside == (r.alpha == 1));
    }
}

TEST_CASE("theorem: lis/lds equal columns/rows of P") {
  Json fx = loadFixture("word_pq_32412143.json");
  Word w = fx["word"].get<Word>();
  CHECK(lisLdsViaTableau(w) ==
        std::pair<int, int>{fx["lis"].get<int>(), fx["lds"].get<int>()});
  CHECK(lisLdsViaTableau({1, 2, 3}) == std::pair<int, int>{3, 1});
  testing::forAllWords(6, 4, [](const Word& w) {
    auto [c, r] = lisLdsViaTableau(w);
    REQUIRE(c == lis(w));
    REQUIRE(r == lds(w));
  });
}
