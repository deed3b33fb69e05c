#include "heckefill/polyomino.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace heckefill {

std::string shapeClassName(ShapeClass c) {
  switch (c) {
    case ShapeClass::kRowConvex: return "row-convex";
    case ShapeClass::kColumnConvex: return "column-convex";
    case ShapeClass::kConvex: return "convex";
    case ShapeClass::kIntersectionFree: return "intersection-free";
    case ShapeClass::kMoon: return "moon";
    case ShapeClass::kStack: return "stack";
    case ShapeClass::kFerrersFrench: return "ferrers-french";
    case ShapeClass::kAlmostMoonRow: return "almost-moon-row";
    case ShapeClass::kAlmostMoonCol: return "almost-moon-col";
  }
  return "?";
}

Polyomino Polyomino::fromCells(std::set<PolyCell> cells) {
  for (auto [r, c] : cells)
    if (r < 1 || c < 1)
      throw std::invalid_argument("fromCells: coordinates must be >= 1");
  Polyomino p;
  p.cells_ = std::move(cells);
  return p;
}

Polyomino Polyomino::fromRowSpec(const std::vector<int>& lengths) {
  size_t i = 0;
  while (i + 1 < lengths.size() && lengths[i] <= lengths[i + 1]) ++i;
  for (; i + 1 < lengths.size(); ++i)
    if (lengths[i] < lengths[i + 1])
      throw std::invalid_argument("fromRowSpec: not a stack polyomino");
  std::set<PolyCell> cells;
  for (size_t i = 0; i < lengths.size(); ++i) {
    if (lengths[i] < 1)
      throw std::invalid_argument("fromRowSpec: row lengths must be >= 1");
    for (int c = 1; c <= lengths[i]; ++c)
      cells.insert({static_cast<int>(i) + 1, c});
  }
  return fromCells(std::move(cells));
}

bool Polyomino::containsRect(const RectSpan& r) const {
  for (int row = r.rowLo; row <= r.rowHi; ++row)
    for (int col = r.colLo; col <= r.colHi; ++col)
      if (!contains(row, col)) return false;
  return true;
}

int Polyomino::maxRow() const {
  int m = 0;
  for (auto [r, c] : cells_) m = std::max(m, r);
  return m;
}

int Polyomino::maxCol() const {
  int m = 0;
  for (auto [r, c] : cells_) m = std::max(m, c);
  return m;
}

std::optional<std::pair<int, int>> Polyomino::rowSpan(int row) const {
  int lo = 0, hi = 0;
  for (auto [r, c] : cells_)
    if (r == row) {
      lo = lo == 0 ? c : std::min(lo, c);
      hi = std::max(hi, c);
    }
  if (lo == 0) return std::nullopt;
  return std::make_pair(lo, hi);
}

std::vector<int> Polyomino::rowLengths() const {
  std::vector<int> out(maxRow(), 0);
  for (auto [r, c] : cells_) ++out[r - 1];
  return out;
}

std::set<int> Polyomino::rowCells(int row) const {
  std::set<int> out;
  for (auto [r, c] : cells_)
    if (r == row) out.insert(c);
  return out;
}

std::set<int> Polyomino::colCells(int col) const {
  std::set<int> out;
  for (auto [r, c] : cells_)
    if (c == col) out.insert(r);
  return out;
}

namespace {

bool isInterval(const std::set<int>& s) {
  if (s.empty()) return true;
  return *s.rbegin() - *s.begin() + 1 == static_cast<int>(s.size());
}

bool comparable(const std::set<int>& a, const std::set<int>& b) {
  auto subset = [](const std::set<int>& x, const std::set<int>& y) {
    return std::includes(y.begin(), y.end(), x.begin(), x.end());
  };
  return subset(a, b) || subset(b, a);
}

}  // namespace

std::set<ShapeClass> Polyomino::classify() const {
  std::set<ShapeClass> tags;
  int mr = maxRow(), mc = maxCol();
  std::vector<std::set<int>> rows(mr + 1), cols(mc + 1);
  for (auto [r, c] : cells_) {
    rows[r].insert(c);
    cols[c].insert(r);
  }

  bool rowConvex = true, colConvex = true;
  for (int r = 1; r <= mr; ++r)
    if (!isInterval(rows[r])) rowConvex = false;
  for (int c = 1; c <= mc; ++c)
    if (!isInterval(cols[c])) colConvex = false;
  if (rowConvex) tags.insert(ShapeClass::kRowConvex);
  if (colConvex) tags.insert(ShapeClass::kColumnConvex);
  if (rowConvex && colConvex) tags.insert(ShapeClass::kConvex);

  bool rowsComparable = true;
  for (int a = 1; a <= mr && rowsComparable; ++a)
    for (int b = a + 1; b <= mr && rowsComparable; ++b)
      if (!rows[a].empty() && !rows[b].empty() && !comparable(rows[a], rows[b]))
        rowsComparable = false;
  bool colsComparable = true;
  for (int a = 1; a <= mc && colsComparable; ++a)
    for (int b = a + 1; b <= mc && colsComparable; ++b)
      if (!cols[a].empty() && !cols[b].empty() && !comparable(cols[a], cols[b]))
        colsComparable = false;
  if (rowsComparable) tags.insert(ShapeClass::kIntersectionFree);

  bool moon = rowConvex && colConvex && rowsComparable;
  if (moon) tags.insert(ShapeClass::kMoon);

  bool leftJustified = true;
  for (int r = 1; r <= mr; ++r)
    if (!rows[r].empty() && rows[r].count(1) == 0) leftJustified = false;
  if (moon && leftJustified) {
    tags.insert(ShapeClass::kStack);
    std::vector<int> lens = rowLengths();
    bool decreasing = true;
    for (size_t i = 0; i + 1 < lens.size(); ++i)
      if (lens[i] < lens[i + 1]) decreasing = false;
    if (decreasing) tags.insert(ShapeClass::kFerrersFrench);
  }

  // Almost-moon: comparable convex rows (columns) with at most one
  // exceptional row (column).
  auto lengthOf = [](const std::set<int>& s) { return static_cast<int>(s.size()); };
  if (rowConvex && rowsComparable) {
    int exceptional = 0;
    for (int r = 1; r <= mr; ++r) {
      if (rows[r].empty()) continue;
      bool longerBelow = false, longerAbove = false;
      for (int s = 1; s < r; ++s)
        if (lengthOf(rows[s]) > lengthOf(rows[r])) longerBelow = true;
      for (int s = r + 1; s <= mr; ++s)
        if (lengthOf(rows[s]) > lengthOf(rows[r])) longerAbove = true;
      if (longerBelow && longerAbove) ++exceptional;
    }
    if (exceptional <= 1) tags.insert(ShapeClass::kAlmostMoonRow);
  }
  if (colConvex && colsComparable) {
    int exceptional = 0;
    for (int c = 1; c <= mc; ++c) {
      if (cols[c].empty()) continue;
      bool longerLeft = false, longerRight = false;
      for (int s = 1; s < c; ++s)
        if (lengthOf(cols[s]) > lengthOf(cols[c])) longerLeft = true;
      for (int s = c + 1; s <= mc; ++s)
        if (lengthOf(cols[s]) > lengthOf(cols[c])) longerRight = true;
      if (longerLeft && longerRight) ++exceptional;
    }
    if (exceptional <= 1) tags.insert(ShapeClass::kAlmostMoonCol);
  }
  return tags;
}

std::vector<RectSpan> Polyomino::maximalRectangles() const {
  int mr = maxRow(), mc = maxCol();
  std::vector<RectSpan> found;
  for (int r1 = 1; r1 <= mr; ++r1)
    for (int r2 = r1; r2 <= mr; ++r2) {
      // maximal column runs common to rows r1..r2
      int c = 1;
      while (c <= mc) {
        bool all = true;
        for (int r = r1; r <= r2 && all; ++r)
          if (!contains(r, c)) all = false;
        if (!all) {
          ++c;
          continue;
        }
        int c2 = c;
        while (c2 + 1 <= mc) {
          bool ok = true;
          for (int r = r1; r <= r2 && ok; ++r)
            if (!contains(r, c2 + 1)) ok = false;
          if (!ok) break;
          ++c2;
        }
        found.push_back({r1, r2, c, c2});
        c = c2 + 1;
      }
    }
  std::vector<RectSpan> out;
  for (const auto& a : found) {
    bool maximal = true;
    for (const auto& b : found)
      if (!(a == b) && b.rowLo <= a.rowLo && a.rowHi <= b.rowHi &&
          b.colLo <= a.colLo && a.colHi <= b.colHi) {
        maximal = false;
        break;
      }
    if (maximal && std::find(out.begin(), out.end(), a) == out.end())
      out.push_back(a);
  }
  return out;
}

Polyomino Polyomino::reflectedVertically() const {
  int mr = maxRow();
  std::set<PolyCell> cells;
  for (auto [r, c] : cells_) cells.insert({mr + 1 - r, c});
  return fromCells(std::move(cells));
}

std::optional<std::string> Filling::validate() const {
  std::map<int, int> perCol;
  for (auto [r, c] : ones) {
    if (!shape.contains(r, c))
      return "one at (" + std::to_string(r) + "," + std::to_string(c) +
             ") outside the shape";
    if (++perCol[c] > 1)
      return "column " + std::to_string(c) + " holds two ones";
  }
  return std::nullopt;
}

void Filling::requireValid(const char* where) const {
  if (auto err = validate())
    throw std::invalid_argument(std::string(where) + ": " + *err);
}

Filling Filling::reflectedVertically() const {
  int mr = shape.maxRow();
  Filling out;
  out.shape = shape.reflectedVertically();
  for (auto [r, c] : ones) out.ones.insert({mr + 1 - r, c});
  return out;
}

namespace {

// Longest strictly-increasing-in-both-coordinates chain from a to b using
// ones inside rect(a, b); a and b are members of `ones`.
int longestNeBetween(const std::vector<PolyCell>& ones, PolyCell a,
                     PolyCell b) {
  // ones sorted by (col, row); DP over eligible intermediates
  std::vector<PolyCell> inside;
  for (auto p : ones)
    if (p.first >= a.first && p.first <= b.first && p.second >= a.second &&
        p.second <= b.second)
      inside.push_back(p);
  std::sort(inside.begin(), inside.end(),
            [](PolyCell x, PolyCell y) { return x.second < y.second; });
  std::vector<int> best(inside.size(), 0);
  int result = 0;
  for (size_t i = 0; i < inside.size(); ++i) {
    if (inside[i] == a) best[i] = 1;
    for (size_t j = 0; j < i; ++j)
      if (best[j] > 0 && inside[j].first < inside[i].first &&
          inside[j].second < inside[i].second)
        best[i] = std::max(best[i], best[j] + 1);
    if (inside[i] == b && best[i] > 0) result = best[i];
  }
  return result;
}

int longestSeBetween(const std::vector<PolyCell>& ones, PolyCell a,
                     PolyCell b) {
  // a is the top-left element, b the bottom-right one
  std::vector<PolyCell> inside;
  for (auto p : ones)
    if (p.first <= a.first && p.first >= b.first && p.second >= a.second &&
        p.second <= b.second)
      inside.push_back(p);
  std::sort(inside.begin(), inside.end(),
            [](PolyCell x, PolyCell y) { return x.second < y.second; });
  std::vector<int> best(inside.size(), 0);
  int result = 0;
  for (size_t i = 0; i < inside.size(); ++i) {
    if (inside[i] == a) best[i] = 1;
    for (size_t j = 0; j < i; ++j)
      if (best[j] > 0 && inside[j].first > inside[i].first &&
          inside[j].second < inside[i].second)
        best[i] = std::max(best[i], best[j] + 1);
    if (inside[i] == b && best[i] > 0) result = best[i];
  }
  return result;
}

}  // namespace

ChainStatsContext::ChainStatsContext(const Polyomino& shape) : shape_(shape) {
  auto tags = shape.classify();
  isMoon_ = tags.count(ShapeClass::kMoon) > 0;
  if (isMoon_) maxRects_ = shape.maximalRectangles();
}

ChainStats ChainStatsContext::statsGeneric(
    const std::set<PolyCell>& ones) const {
  ChainStats out;
  out.n = static_cast<int>(ones.size());
  if (ones.empty()) return out;
  std::vector<PolyCell> v(ones.begin(), ones.end());
  out.ne = 1;
  out.se = 1;
  for (auto a : v)
    for (auto b : v) {
      if (a.first < b.first && a.second < b.second &&
          shape_.containsRect({a.first, b.first, a.second, b.second}))
        out.ne = std::max(out.ne, longestNeBetween(v, a, b));
      if (a.first > b.first && a.second < b.second &&
          shape_.containsRect({b.first, a.first, a.second, b.second}))
        out.se = std::max(out.se, longestSeBetween(v, a, b));
    }
  return out;
}

ChainStats ChainStatsContext::statsMoonShortcut(
    const std::set<PolyCell>& ones) const {
  ChainStats out;
  out.n = static_cast<int>(ones.size());
  if (ones.empty()) return out;
  out.ne = 1;
  out.se = 1;
  for (const auto& rect : maxRects_) {
    std::vector<PolyCell> inside;
    for (auto p : ones)
      if (p.first >= rect.rowLo && p.first <= rect.rowHi &&
          p.second >= rect.colLo && p.second <= rect.colHi)
        inside.push_back(p);
    std::sort(inside.begin(), inside.end(),
              [](PolyCell x, PolyCell y) { return x.second < y.second; });
    // lis/lds of the row sequence read by columns
    std::vector<int> incBest(inside.size(), 1), decBest(inside.size(), 1);
    for (size_t i = 0; i < inside.size(); ++i)
      for (size_t j = 0; j < i; ++j) {
        if (inside[j].second >= inside[i].second) continue;
        if (inside[j].first < inside[i].first)
          incBest[i] = std::max(incBest[i], incBest[j] + 1);
        if (inside[j].first > inside[i].first)
          decBest[i] = std::max(decBest[i], decBest[j] + 1);
      }
    for (size_t i = 0; i < inside.size(); ++i) {
      out.ne = std::max(out.ne, incBest[i]);
      out.se = std::max(out.se, decBest[i]);
    }
  }
  return out;
}

ChainStats ChainStatsContext::stats(const std::set<PolyCell>& ones) const {
  return isMoon_ ? statsMoonShortcut(ones) : statsGeneric(ones);
}

ChainStats chainStats(const Filling& f) {
  f.requireValid("chainStats");
  ChainStatsContext ctx(f.shape);
  ChainStats generic = ctx.statsGeneric(f.ones);
  if (ctx.isMoon()) {
    ChainStats shortcut = ctx.statsMoonShortcut(f.ones);
    if (!(shortcut == generic))
      throw std::logic_error(
          "chainStats: moon shortcut disagrees with the generic chain scan");
  }
  return generic;
}

namespace {

struct ColumnChoice {
  int col = 0;
  std::vector<int> rows;  // bottom-up; choice 0 = leave empty
};

void enumerateRec(const std::vector<ColumnChoice>& cols, size_t idx,
                  const EnumMode& mode, int shards, int shard,
                  std::set<PolyCell>& ones, std::vector<int>& rowCount,
                  const std::function<void(const std::set<PolyCell>&)>& f) {
  if (mode.kind == EnumMode::Kind::kFixedN &&
      static_cast<int>(ones.size()) > mode.n)
    return;
  if (idx == cols.size()) {
    if (shards > 1 && shard != 0) return;
    if (mode.kind == EnumMode::Kind::kFixedN &&
        static_cast<int>(ones.size()) != mode.n)
      return;
    if (mode.kind == EnumMode::Kind::kRowSums) {
      for (size_t r = 0; r < mode.rowSums.size(); ++r)
        if (rowCount[r + 1] != mode.rowSums[r]) return;
    }
    f(ones);
    return;
  }
  const auto& col = cols[idx];
  int k = static_cast<int>(col.rows.size()) + 1;  // including "empty"
  for (int choice = 0; choice < k; ++choice) {
    int subShard = shard, subShards = shards;
    if (shards > 1) {
      if (k >= shards) {
        if (choice % shards != shard) continue;
        subShard = 0;
        subShards = 1;
      } else {
        if (choice != shard % k) continue;
        // shards s with s % k == choice, renumbered by s / k
        subShard = shard / k;
        subShards = (shards - 1 - choice) / k + 1;
      }
    }
    if (choice == 0) {
      enumerateRec(cols, idx + 1, mode, subShards, subShard, ones, rowCount,
                   f);
    } else {
      int row = col.rows[choice - 1];
      if (mode.kind == EnumMode::Kind::kRowSums &&
          rowCount[row] + 1 > mode.rowSums[row - 1])
        continue;
      ones.insert({row, col.col});
      ++rowCount[row];
      enumerateRec(cols, idx + 1, mode, subShards, subShard, ones, rowCount,
                   f);
      --rowCount[row];
      ones.erase({row, col.col});
    }
  }
}

}  // namespace

void enumerateFillings(
    const Polyomino& shape, const EnumMode& mode, int shards, int shard,
    const std::function<void(const std::set<PolyCell>&)>& f) {
  if (shards < 1 || shard < 0 || shard >= shards)
    throw std::invalid_argument("enumerateFillings: bad shard spec");
  if (mode.kind == EnumMode::Kind::kRowSums &&
      static_cast<int>(mode.rowSums.size()) != shape.maxRow())
    throw std::invalid_argument(
        "enumerateFillings: rowSums needs one entry per row");
  std::vector<ColumnChoice> cols;
  for (int c = 1; c <= shape.maxCol(); ++c) {
    ColumnChoice cc;
    cc.col = c;
    for (int r = 1; r <= shape.maxRow(); ++r)
      if (shape.contains(r, c)) cc.rows.push_back(r);
    if (!cc.rows.empty()) cols.push_back(std::move(cc));
  }
  std::set<PolyCell> ones;
  std::vector<int> rowCount(shape.maxRow() + 1, 0);
  enumerateRec(cols, 0, mode, shards, shard, ones, rowCount, f);
}

GenPoly genPoly(const Polyomino& shape, const EnumMode& mode, int shards,
                int shard) {
  GenPoly out;
  ChainStatsContext ctx(shape);
  enumerateFillings(shape, mode, shards, shard,
                    [&](const std::set<PolyCell>& ones) {
                      ChainStats s = ctx.stats(ones);
                      ++out[{s.ne, s.se}];
                    });
  return out;
}

void mergeGenPoly(GenPoly& into, const GenPoly& from) {
  for (const auto& [key, count] : from) into[key] += count;
}

long long countFillings(const Polyomino& shape, int n, int u, int v) {
  long long total = 0;
  ChainStatsContext ctx(shape);
  enumerateFillings(shape, EnumMode::fixedN(n), 1, 0,
                    [&](const std::set<PolyCell>& ones) {
                      ChainStats s = ctx.stats(ones);
                      if (s.ne == u && s.se == v) ++total;
                    });
  return total;
}

std::map<std::tuple<int, int, int>, long long> fullCountTable(
    const Polyomino& shape) {
  std::map<std::tuple<int, int, int>, long long> out;
  ChainStatsContext ctx(shape);
  enumerateFillings(shape, EnumMode::all(), 1, 0,
                    [&](const std::set<PolyCell>& ones) {
                      ChainStats s = ctx.stats(ones);
                      ++out[{s.n, s.ne, s.se}];
                    });
  return out;
}

}  // namespace heckefill
