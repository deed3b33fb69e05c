#include <doctest.h>

#include "heckefill/insertion.hpp"
#include "heckefill/jdt.hpp"
#include "heckefill/json_io.hpp"
#include "test_helpers.hpp"

using namespace heckefill;

namespace {

SkewIncreasingTableau skewFromFixture(const Json& fx, const char* outerKey,
                                      const char* innerKey,
                                      const char* entriesKey) {
  std::map<Cell, int> entries;
  for (const auto& e : fx[entriesKey])
    entries[{e[0][0].get<int>(), e[0][1].get<int>()}] = e[1].get<int>();
  return {partitionFromJson(fx[outerKey]), partitionFromJson(fx[innerKey]),
          std::move(entries)};
}

CornerSet cornersFromFixture(const Json& fx, const char* key) {
  CornerSet out;
  for (const auto& c : fx[key]) out.insert({c[0].get<int>(), c[1].get<int>()});
  return out;
}

}  // namespace

TEST_CASE("corner helpers") {
  Partition p({2, 1});
  CHECK(innerCorners(p) == CornerSet{{1, 2}, {2, 1}});
  CHECK(addableCorners(p) == CornerSet{{1, 3}, {2, 2}, {3, 1}});
  CHECK(innerCorners(Partition()).empty());
  CHECK(addableCorners(Partition()) == CornerSet{{1, 1}});
}

TEST_CASE("forward slide fixture") {
  Json fx = loadFixture("jdt_slide_example.json");
  auto t = skewFromFixture(fx, "outer", "inner", "entries");
  auto c = cornersFromFixture(fx, "corners");
  auto result = jdt(t, c);
  auto expected =
      skewFromFixture(fx, "result_outer", "result_inner", "result_entries");
  CHECK(result == expected);
  CHECK(jdt(t, {}) == t);
  CHECK_THROWS_AS(jdt(t, CornerSet{{1, 1}}), std::invalid_argument);
}

TEST_CASE("single-box slide") {
  SkewIncreasingTableau t(Partition({2}), Partition({1}), {{{1, 2}, 2}});
  auto result = jdt(t, CornerSet{{1, 1}});
  SkewIncreasingTableau expected(Partition({1}), Partition(), {{{1, 1}, 2}});
  CHECK(result == expected);
}

TEST_CASE("reverse slide fixture") {
  Json fx = loadFixture("revjdt_slide_example.json");
  auto t = skewFromFixture(fx, "outer", "inner", "entries");
  auto c = cornersFromFixture(fx, "corners");
  auto result = revJdt(t, c);
  auto expected =
      skewFromFixture(fx, "result_outer", "result_inner", "result_entries");
  CHECK(result == expected);
  CHECK(revJdt(t, {}) == t);
  CHECK_THROWS_AS(revJdt(t, CornerSet{{1, 1}}), std::invalid_argument);
}

TEST_CASE("slides preserve increasing-tableau validity") {
  // slide every small straight tableau from each inner-corner subset
  for (const auto& t : testing::allIncreasingTableaux(3, 3, 4)) {
    if (t.empty()) continue;
    auto skew = SkewIncreasingTableau::fromStraight(t);
    auto addable = addableCorners(t.shape());
    std::vector<Cell> corners(addable.begin(), addable.end());
    for (size_t mask = 1; mask < (size_t{1} << corners.size()); ++mask) {
      CornerSet c;
      for (size_t i = 0; i < corners.size(); ++i)
        if (mask & (size_t{1} << i)) c.insert(corners[i]);
      auto moved = revJdt(skew, c);
      CHECK_FALSE(moved.validate().has_value());
      // slide back from the holes the reverse pass opened
      CornerSet backFrom = innerCorners(moved.inner());
      auto back = jdt(moved, backFrom);
      CHECK_FALSE(back.validate().has_value());
    }
  }
}

TEST_CASE("prime transform fixture") {
  Json fx = loadFixture("prime_transform_example.json");
  IncreasingTableau p = increasingTableauFromJson(fx["P"]);
  CHECK(insertWord(fx["word"].get<Word>()).p == p);
  IncreasingTableau pPrime = increasingTableauFromJson(fx["P_prime"]);
  CHECK(primeTransform(p) == pPrime);
  CHECK(inversePrimeTransform(pPrime) == p);
}

TEST_CASE("prime transform trivia") {
  IncreasingTableau one(std::vector<std::vector<int>>{{1}});
  CHECK(primeTransform(one) == one);
  CHECK(inversePrimeTransform(one) == one);
  CHECK_THROWS_WITH_AS(primeTransform(IncreasingTableau({{2, 3}})),
                       doctest::Contains("no letter 1"),
                       std::invalid_argument);
}

TEST_CASE("prime transform round-trips exhaustively") {
  int count = 0;
  for (const auto& t : testing::allIncreasingTableaux(3, 3, 4)) {
    if (t.empty() || t.at({1, 1}) != 1) continue;
    IncreasingTableau p = primeTransform(t);
    CHECK(p.shape() == t.shape());
    IncreasingTableau back = inversePrimeTransform(p);
    if (back != t) {
      CAPTURE(t.str());
      REQUIRE(back == t);
    }
    ++count;
  }
  CHECK(count == 90);
}
