#include "heckefill/insertion.hpp"

#include <algorithm>
#include <stdexcept>

namespace heckefill {

namespace {

// Appending v at the end of row r keeps the tableau increasing iff the row is
// empty or ends below v, and the cell above the new box (if any) is below v.
bool canAppend(const std::vector<std::vector<int>>& rows, int r, int v) {
  const auto& row = rows[r - 1];
  if (!row.empty() && row.back() >= v) return false;
  int newCol = static_cast<int>(row.size()) + 1;
  if (r > 1) {
    const auto& above = rows[r - 2];
    if (newCol > static_cast<int>(above.size())) return false;  // shape break
    if (above[newCol - 1] >= v) return false;
  }
  return true;
}

bool canReplace(const std::vector<std::vector<int>>& rows, int r, int c,
                int v) {
  const auto& row = rows[r - 1];
  if (c > 1 && row[c - 2] >= v) return false;
  if (r > 1 && rows[r - 2][c - 1] >= v) return false;
  // Entries right/below only grow relative to the replaced value, so only
  // the left and upper neighbors can break.
  return true;
}

// Bottom row of the column holding (1, col) ... generally of column `col`.
int columnBottomRow(const Partition& shape, int col) {
  int r = 1;
  while (shape.part(r + 1) >= col) ++r;
  return r;
}

}  // namespace

InsertionResult heckeInsert(const IncreasingTableau& y, int x) {
  y.requireValid("heckeInsert");
  if (x < 1) throw std::invalid_argument("heckeInsert: letter must be >= 1");
  std::vector<std::vector<int>> rows = y.rows();
  int v = x;
  for (int r = 1;; ++r) {
    bool newRow = r > static_cast<int>(rows.size());
    if (newRow || v >= rows[r - 1].back()) {
      if (newRow) rows.emplace_back();
      if (canAppend(rows, r, v)) {
        rows[r - 1].push_back(v);
        IncreasingTableau z(std::move(rows));
        Cell corner{r, z.rowLength(r)};
        return {std::move(z), corner, 1};
      }
      if (newRow)
        throw std::logic_error("heckeInsert: blocked append on a new row");
      // Row unchanged; the special corner is at the bottom of the column
      // holding the rightmost box of this row.
      IncreasingTableau z(std::move(rows));
      int col = z.rowLength(r);
      Cell corner{columnBottomRow(z.shape(), col), col};
      return {std::move(z), corner, 0};
    }
    // v is smaller than some entry; bump the smallest entry above v.
    auto& row = rows[r - 1];
    auto it = std::upper_bound(row.begin(), row.end(), v);
    int c = static_cast<int>(it - row.begin()) + 1;
    int bumped = *it;
    if (canReplace(rows, r, c, v)) *it = v;
    v = bumped;
  }
}

std::pair<IncreasingTableau, int> reverseHeckeInsert(const IncreasingTableau& z,
                                                     Cell corner, int alpha) {
  z.requireValid("reverseHeckeInsert");
  Partition shape = z.shape();
  bool isCorner = corner.row >= 1 && corner.col >= 1 &&
                  shape.part(corner.row) == corner.col &&
                  shape.part(corner.row + 1) < corner.col;
  if (!isCorner) throw std::invalid_argument("reverseHeckeInsert: not a corner");
  if (alpha != 0 && alpha != 1)
    throw std::invalid_argument("reverseHeckeInsert: alpha must be 0 or 1");

  std::vector<std::vector<int>> rows = z.rows();
  int v = rows[corner.row - 1][corner.col - 1];
  if (alpha == 1) {
    rows[corner.row - 1].pop_back();
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
  }
  for (int r = corner.row - 1; r >= 1; --r) {
    auto& row = rows[r - 1];
    auto it = std::lower_bound(row.begin(), row.end(), v);
    if (it == row.begin())
      throw std::invalid_argument("reverseHeckeInsert: inconsistent triple");
    --it;  // largest entry < v
    int x = *it;
    int c = static_cast<int>(it - row.begin()) + 1;
    // Replacing x with v must keep the tableau increasing; the left neighbor
    // is below x < v, so only the right and lower neighbors can break.
    bool ok = true;
    if (c < static_cast<int>(row.size()) && row[c] <= v) ok = false;
    if (r < static_cast<int>(rows.size()) &&
        c <= static_cast<int>(rows[r].size()) && rows[r][c - 1] <= v)
      ok = false;
    if (ok) *it = v;
    v = x;
  }
  IncreasingTableau y(std::move(rows));
  // The reverse rules accept some triples outside the forward image; certify
  // by replaying the forward insertion.
  InsertionResult forward = heckeInsert(y, v);
  if (forward.tableau != z || forward.corner != corner ||
      forward.alpha != alpha)
    throw std::invalid_argument("reverseHeckeInsert: inconsistent triple");
  return {std::move(y), v};
}

HeckePair insertWord(const Word& w) {
  IncreasingTableau p;
  SetValuedTableau q;
  for (size_t k = 0; k < w.size(); ++k) {
    InsertionResult step = heckeInsert(p, w[k]);
    if (step.alpha == 1)
      q.addBoxWithValue(step.corner, static_cast<int>(k) + 1);
    else
      q.appendValue(step.corner, static_cast<int>(k) + 1);
    p = std::move(step.tableau);
  }
  return {std::move(p), std::move(q)};
}

Word recoverWord(const HeckePair& pair) {
  pair.p.requireValid("recoverWord");
  if (pair.p.shape() != pair.q.shape())
    throw std::invalid_argument("recoverWord: unrecoverable pair (shapes differ)");
  if (pair.q.validateAsRecording())
    throw std::invalid_argument("recoverWord: unrecoverable pair (bad recording tableau)");

  int n = 0;
  for (const auto& row : pair.q.rows())
    for (const auto& cell : row) n += static_cast<int>(cell.size());

  IncreasingTableau p = pair.p;
  SetValuedTableau q = pair.q;
  Word w(n);
  try {
    for (int k = n; k >= 1; --k) {
      Cell where{0, 0};
      bool singleton = false;
      bool found = false;
      const auto& rows = q.rows();
      for (int r = 1; r <= static_cast<int>(rows.size()) && !found; ++r)
        for (int c = 1; c <= static_cast<int>(rows[r - 1].size()) && !found;
             ++c) {
          const auto& s = rows[r - 1][c - 1];
          if (std::find(s.begin(), s.end(), k) != s.end()) {
            where = {r, c};
            singleton = (s.size() == 1);
            found = true;
          }
        }
      if (!found)
        throw std::invalid_argument("value missing from recording tableau");
      int alpha = singleton ? 1 : 0;
      auto [y, x] = reverseHeckeInsert(p, where, alpha);
      q.removeValue(where, k);
      p = std::move(y);
      w[k - 1] = x;
    }
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("recoverWord: unrecoverable pair");
  }
  if (!p.empty())
    throw std::invalid_argument("recoverWord: unrecoverable pair");
  return w;
}

std::pair<int, int> lisLdsViaTableau(const Word& w) {
  HeckePair pair = insertWord(w);
  Partition shape = pair.p.shape();
  return {shape.cols(), shape.rows()};
}

}  // namespace heckefill
