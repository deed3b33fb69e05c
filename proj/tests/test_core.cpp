#include <doctest.h>

#include <map>
#include <set>

#include "heckefill/core.hpp"
#include "heckefill/json_io.hpp"

using namespace heckefill;

TEST_CASE("partition basics") {
  Partition p({3, 2, 2});
  CHECK(p.rows() == 3);
  CHECK(p.cols() == 3);
  CHECK(p.cells() == 7);
  CHECK(p.part(2) == 2);
  CHECK(p.part(4) == 0);
  CHECK(Partition({3, 2, 2, 0, 0}) == p);
  CHECK_THROWS(Partition({2, 3}));
  CHECK_THROWS(Partition({2, -1}));
  CHECK(p.transposed() == Partition({3, 3, 1}));
  CHECK(p.contains(Partition({2, 2})));
  CHECK_FALSE(Partition({2, 2}).contains(p));
  CHECK(p.unionWith(Partition({4, 1})) == Partition({4, 2, 2}));
  CHECK(p.intersect(Partition({4, 1})) == Partition({3, 1}));
  CHECK(p.withBoxAdded(1) == Partition({4, 2, 2}));
  CHECK(p.withBoxRemoved(3) == Partition({3, 2, 1}));
  CHECK(*Partition({3, 2, 2, 1}).oneBoxRowAbove(p) == 4);
  CHECK_FALSE(Partition({4, 3, 2}).oneBoxRowAbove(p).has_value());
  CHECK(Partition({2, 2, 1}).cornerRows() == std::vector<int>{2, 3});
}

TEST_CASE("reading words") {
  IncreasingTableau p({{1, 2, 3}, {2, 4}, {3}});
  CHECK(readingWord(p) == Word{3, 2, 4, 1, 2, 3});
  CHECK(readingWord(IncreasingTableau()).empty());
  CHECK(readingWord(IncreasingTableau(std::vector<std::vector<int>>{{5}})) == Word{5});

  auto skew = SkewIncreasingTableau(
      Partition({3, 2}), Partition({1}),
      {{{1, 2}, 2}, {{1, 3}, 4}, {{2, 1}, 1}, {{2, 2}, 3}});
  CHECK(readingWord(skew) == Word{1, 3, 2, 4});
}

TEST_CASE("standardize") {
  CHECK(standardize({3, 7, 3, 9}) == Word{1, 2, 1, 3});
  CHECK(standardize({1, 2, 3}) == Word{1, 2, 3});
  CHECK(standardize({5, 5, 5}) == Word{1, 1, 1});
  CHECK(standardize({}).empty());
}

TEST_CASE("standardize is idempotent on short words") {
  for (int len = 0; len <= 8; ++len) {
    long long total = 1;
    for (int i = 0; i < len; ++i) total *= 5;
    for (long long code = 0; code < total; ++code) {
      long long c = code;
      Word w(len);
      for (int i = 0; i < len; ++i) {
        w[i] = static_cast<int>(c % 5) + 1;
        c /= 5;
      }
      Word s = standardize(w);
      if (standardize(s) != s) {
        CAPTURE(wordStr(w));
        CHECK(standardize(s) == s);
      }
    }
  }
  CHECK(true);
}

TEST_CASE("validate reports the first bad cell") {
  CHECK_FALSE(IncreasingTableau({{1, 2}, {2, 3}}).validate().has_value());
  auto v = IncreasingTableau({{1, 2}, {2, 2}}).validate();
  REQUIRE(v.has_value());
  CHECK(v->cell == Cell{2, 2});
  CHECK(v->reason == "column not strictly increasing");

  auto shapeBad = IncreasingTableau({{1}, {2, 3}}).validate();
  REQUIRE(shapeBad.has_value());

  SetValuedTableau q({{{1}, {3, 4}}, {{2, 5}, {6}}});
  CHECK_FALSE(q.validate().has_value());
  CHECK_FALSE(q.validateAsRecording().has_value());
  SetValuedTableau bad({{{1, 3}, {3}}});
  CHECK(bad.validate().has_value());
}

TEST_CASE("reading word is injective per shape on small tableaux") {
  // all increasing tableaux with entries <= 4 inside a 3x3 box
  std::map<std::string, std::set<Word>> byShape;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= a; ++b)
      for (int c = 0; c <= b; ++c) {
        std::vector<int> parts;
        if (a) parts.push_back(a);
        if (b) parts.push_back(b);
        if (c) parts.push_back(c);
        Partition shape(parts);
        std::vector<Cell> cells;
        for (int r = 1; r <= shape.rows(); ++r)
          for (int col = 1; col <= shape.part(r); ++col)
            cells.push_back({r, col});
        if (cells.empty()) continue;
        std::vector<int> vals(cells.size(), 1);
        while (true) {
          std::vector<std::vector<int>> rws(shape.rows());
          for (int r = 1; r <= shape.rows(); ++r)
            rws[r - 1].resize(shape.part(r));
          for (size_t i = 0; i < cells.size(); ++i)
            rws[cells[i].row - 1][cells[i].col - 1] = vals[i];
          IncreasingTableau t(rws);
          if (!t.validate()) {
            auto w = readingWord(t);
            CHECK(byShape[shape.str()].insert(w).second);
          }
          size_t i = 0;
          while (i < vals.size() && vals[i] == 4) vals[i++] = 1;
          if (i == vals.size()) break;
          ++vals[i];
        }
      }
}

TEST_CASE("json round trips are canonical") {
  Partition p({3, 1});
  CHECK(partitionFromJson(toJson(p)) == p);
  IncreasingTableau t({{1, 2}, {2, 3}});
  CHECK(increasingTableauFromJson(toJson(t)) == t);
  SetValuedTableau q({{{1}, {4, 3}}});
  CHECK(toJson(q)[0][1] == Json::array({3, 4}));  // sets sorted ascending
  CHECK(parseWord("3,2,4") == Word{3, 2, 4});
  CHECK(parseWord("3 2 4") == Word{3, 2, 4});
}
