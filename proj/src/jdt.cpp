#include "heckefill/jdt.hpp"

#include <algorithm>
#include <stdexcept>

namespace heckefill {

namespace {

constexpr int kHole = 0;

struct SlideBoard {
  std::map<Cell, int> cells;  // kHole marks a hole

  std::vector<Cell> holes() const {
    std::vector<Cell> out;
    for (const auto& [c, v] : cells)
      if (v == kHole) out.push_back(c);
    return out;
  }
};

// One stage: flip holes with the given value along the given adjacency.
// `forward` = true slides values northwest (neighbors below/right of a hole).
void slideStage(SlideBoard& board, int value, bool forward) {
  std::vector<Cell> holesToFill;
  std::set<Cell> valuesToEmpty;
  for (const auto& [c, v] : board.cells) {
    if (v != kHole) continue;
    std::vector<Cell> nbrs;
    if (forward)
      nbrs = {{c.row + 1, c.col}, {c.row, c.col + 1}};
    else
      nbrs = {{c.row - 1, c.col}, {c.row, c.col - 1}};
    bool flipped = false;
    for (Cell n : nbrs) {
      auto it = board.cells.find(n);
      if (it != board.cells.end() && it->second == value) {
        valuesToEmpty.insert(n);
        flipped = true;
      }
    }
    if (flipped) holesToFill.push_back(c);
  }
  for (Cell c : holesToFill) board.cells[c] = value;
  for (Cell c : valuesToEmpty) board.cells[c] = kHole;
}

SkewIncreasingTableau boardToTableau(const SlideBoard& board,
                                     const Partition& keepInner,
                                     const char* where) {
  // Numeric cells stay where they are; remaining holes are dropped from the
  // outer shape except those of keepInner, which stay as inner holes.
  std::map<Cell, int> entries;
  std::map<int, int> rowLen;
  for (int r = 1; r <= keepInner.rows(); ++r) rowLen[r] = keepInner.part(r);
  for (const auto& [c, v] : board.cells) {
    bool isInnerHole = keepInner.part(c.row) >= c.col;
    if (v == kHole && !isInnerHole) continue;
    rowLen[c.row] = std::max(rowLen[c.row], c.col);
    if (v != kHole) entries[c] = v;
  }
  int maxRow = rowLen.empty() ? 0 : rowLen.rbegin()->first;
  std::vector<int> outerParts(maxRow, 0);
  for (const auto& [r, len] : rowLen) outerParts[r - 1] = len;
  Partition outer;
  try {
    outer = Partition(outerParts);
  } catch (const std::invalid_argument&) {
    throw std::logic_error(std::string(where) +
                           ": slide result is not a skew shape");
  }
  SkewIncreasingTableau out(outer, keepInner, std::move(entries));
  out.requireValid(where);
  return out;
}

}  // namespace

CornerSet innerCorners(const Partition& p) {
  CornerSet out;
  for (int r : p.cornerRows()) out.insert({r, p.part(r)});
  return out;
}

CornerSet addableCorners(const Partition& p) {
  CornerSet out;
  out.insert({1, p.part(1) + 1});
  for (int r = 2; r <= p.rows() + 1; ++r)
    if (p.part(r) < p.part(r - 1)) out.insert({r, p.part(r) + 1});
  return out;
}

SkewIncreasingTableau jdt(const SkewIncreasingTableau& t, const CornerSet& c) {
  t.requireValid("jdt");
  if (c.empty()) return t;
  CornerSet legal = innerCorners(t.inner());
  for (Cell cell : c)
    if (!legal.count(cell))
      throw std::invalid_argument("jdt: cell is not an inner corner");

  SlideBoard board;
  board.cells = t.entries();
  for (Cell cell : c) board.cells[cell] = kHole;
  int maxVal = t.maxEntry();
  for (int v = 1; v <= maxVal; ++v) slideStage(board, v, /*forward=*/true);

  Partition keepInner = t.inner();
  for (Cell cell : c) {
    // Hole origins leave the inner shape; peel corners in a valid order.
    keepInner = keepInner.withBoxRemoved(cell.row);
  }
  return boardToTableau(board, keepInner, "jdt");
}

SkewIncreasingTableau revJdt(const SkewIncreasingTableau& t,
                             const CornerSet& c) {
  t.requireValid("revJdt");
  if (c.empty()) return t;
  CornerSet legal = addableCorners(t.outer());
  for (Cell cell : c)
    if (!legal.count(cell))
      throw std::invalid_argument("revJdt: cell is not an addable corner");

  SlideBoard board;
  board.cells = t.entries();
  for (Cell cell : c) board.cells[cell] = kHole;
  int maxVal = t.maxEntry();
  for (int v = maxVal; v >= 1; --v) slideStage(board, v, /*forward=*/false);

  // Cells vacated at the northwest end join the inner shape.
  Partition inner = t.inner();
  for (Cell hole : board.holes()) {
    if (inner.part(hole.row) == hole.col - 1)
      inner = inner.withBoxAdded(hole.row);
    else if (inner.part(hole.row) < hole.col)
      throw std::logic_error("revJdt: detached hole");
  }
  return boardToTableau(board, inner, "revJdt");
}

IncreasingTableau primeTransform(const IncreasingTableau& p) {
  p.requireValid("primeTransform");
  if (p.empty())
    throw std::invalid_argument("primeTransform: empty tableau");
  if (p.at({1, 1}) != 1)
    throw std::invalid_argument("primeTransform: no letter 1");
  int m = p.maxEntry();

  SlideBoard board;
  board.cells.clear();
  for (int r = 1; r <= p.rowCount(); ++r)
    for (int col = 1; col <= p.rowLength(r); ++col)
      board.cells[{r, col}] = p.at({r, col});
  board.cells[{1, 1}] = kHole;
  for (int v = 2; v <= m; ++v) slideStage(board, v, /*forward=*/true);

  std::vector<std::vector<int>> rows(p.rowCount());
  for (const auto& [cell, v] : board.cells) {
    auto& row = rows[cell.row - 1];
    if (static_cast<int>(row.size()) < cell.col) row.resize(cell.col);
    row[cell.col - 1] = (v == kHole) ? m : v - 1;
  }
  IncreasingTableau out(std::move(rows));
  out.requireValid("primeTransform output");
  if (out.shape() != p.shape())
    throw std::logic_error("primeTransform: shape changed");
  return out;
}

IncreasingTableau inversePrimeTransform(const IncreasingTableau& p) {
  p.requireValid("inversePrimeTransform");
  if (p.empty())
    throw std::invalid_argument("inversePrimeTransform: empty tableau");
  int m = p.maxEntry();

  SlideBoard board;
  for (int r = 1; r <= p.rowCount(); ++r)
    for (int col = 1; col <= p.rowLength(r); ++col) {
      int v = p.at({r, col});
      board.cells[{r, col}] = (v == m) ? kHole : v;
    }
  for (int v = m - 1; v >= 1; --v) slideStage(board, v, /*forward=*/false);

  std::vector<std::vector<int>> rows(p.rowCount());
  for (const auto& [cell, v] : board.cells) {
    auto& row = rows[cell.row - 1];
    if (static_cast<int>(row.size()) < cell.col) row.resize(cell.col);
    row[cell.col - 1] = (v == kHole) ? 1 : v + 1;
  }
  IncreasingTableau out(std::move(rows));
  out.requireValid("inversePrimeTransform output");
  if (out.shape() != p.shape())
    throw std::logic_error("inversePrimeTransform: shape changed");
  return out;
}

}  // namespace heckefill
