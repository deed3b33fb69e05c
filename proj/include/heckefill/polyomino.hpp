#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "heckefill/core.hpp"

namespace heckefill {

// Polyomino cells in Cartesian coordinates: row 1 is the bottom row,
// col 1 the leftmost column (the matrix-representation convention).
using PolyCell = std::pair<int, int>;  // (row, col)

struct RectSpan {
  int rowLo = 0, rowHi = 0, colLo = 0, colHi = 0;
  int rows() const { return rowHi - rowLo + 1; }
  int cols() const { return colHi - colLo + 1; }
  bool operator==(const RectSpan&) const = default;
  bool operator<(const RectSpan& o) const {
    return std::tie(rowLo, rowHi, colLo, colHi) <
           std::tie(o.rowLo, o.rowHi, o.colLo, o.colHi);
  }
};

enum class ShapeClass {
  kRowConvex,
  kColumnConvex,
  kConvex,
  kIntersectionFree,
  kMoon,
  kStack,
  kFerrersFrench,
  kAlmostMoonRow,
  kAlmostMoonCol,
};

std::string shapeClassName(ShapeClass c);

class Polyomino {
 public:
  Polyomino() = default;
  static Polyomino fromCells(std::set<PolyCell> cells);
  // Left-justified rows of the given lengths, bottom row first; rejects
  // non-unimodal specs ("not a stack polyomino").
  static Polyomino fromRowSpec(const std::vector<int>& lengths);

  const std::set<PolyCell>& cells() const { return cells_; }
  bool contains(int row, int col) const { return cells_.count({row, col}); }
  bool containsRect(const RectSpan& r) const;
  int cellCount() const { return static_cast<int>(cells_.size()); }
  bool empty() const { return cells_.empty(); }
  int maxRow() const;
  int maxCol() const;
  // Columns of a row, as an interval when row-convex.
  std::optional<std::pair<int, int>> rowSpan(int row) const;
  std::vector<int> rowLengths() const;  // bottom row first
  std::set<int> rowCells(int row) const;
  std::set<int> colCells(int col) const;

  std::set<ShapeClass> classify() const;
  bool is(ShapeClass c) const { return classify().count(c) > 0; }

  std::vector<RectSpan> maximalRectangles() const;
  Polyomino reflectedVertically() const;

  bool operator==(const Polyomino&) const = default;
  bool operator<(const Polyomino& o) const { return cells_ < o.cells_; }

 private:
  std::set<PolyCell> cells_;
};

// 01-filling with at most one 1 per column.
struct Filling {
  Polyomino shape;
  std::set<PolyCell> ones;
  std::optional<std::string> validate() const;
  void requireValid(const char* where) const;
  Filling reflectedVertically() const;
  bool operator==(const Filling&) const = default;
};

struct ChainStats {
  int n = 0;
  int ne = 0;
  int se = 0;
  bool operator==(const ChainStats&) const = default;
};

// Reusable per-shape state for chain statistics: the maximal-rectangle
// shortcut is used on moon polyominoes, the generic pair scan elsewhere.
class ChainStatsContext {
 public:
  explicit ChainStatsContext(const Polyomino& shape);
  ChainStats stats(const std::set<PolyCell>& ones) const;
  ChainStats statsGeneric(const std::set<PolyCell>& ones) const;
  ChainStats statsMoonShortcut(const std::set<PolyCell>& ones) const;
  bool isMoon() const { return isMoon_; }

 private:
  const Polyomino shape_;
  bool isMoon_ = false;
  std::vector<RectSpan> maxRects_;
};

// Generic computation plus, on moon shapes, the shortcut cross-check.
ChainStats chainStats(const Filling& f);

struct EnumMode {
  enum class Kind { kAll, kFixedN, kRowSums } kind = Kind::kAll;
  int n = 0;
  std::vector<int> rowSums;  // bottom row first
  static EnumMode all() { return {}; }
  static EnumMode fixedN(int n) { return {Kind::kFixedN, n, {}}; }
  static EnumMode withRowSums(std::vector<int> sums) {
    return {Kind::kRowSums, 0, std::move(sums)};
  }
};

// Column-major enumeration in a fixed order; shard s of S takes the
// fillings whose first-column choice index is congruent to s, recursing
// into later columns when a column has fewer choices than shards.
void enumerateFillings(const Polyomino& shape, const EnumMode& mode,
                       int shards, int shard,
                       const std::function<void(const std::set<PolyCell>&)>& f);

// coefficient map (ne, se) -> count
using GenPoly = std::map<std::pair<int, int>, long long>;

GenPoly genPoly(const Polyomino& shape, const EnumMode& mode, int shards = 1,
                int shard = 0);
void mergeGenPoly(GenPoly& into, const GenPoly& from);

long long countFillings(const Polyomino& shape, int n, int u, int v);

// (n, ne, se) -> count over all fillings; the full table of criterion runs.
std::map<std::tuple<int, int, int>, long long> fullCountTable(
    const Polyomino& shape);

}  // namespace heckefill
