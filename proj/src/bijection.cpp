#include "heckefill/bijection.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "heckefill/insertion.hpp"
#include "heckefill/jdt.hpp"

namespace heckefill {

namespace {

void requireRect(const RectangleFilling& t, const char* where) {
  for (auto [r, c] : t.ones)
    if (r < 1 || r > t.height || c < 1 || c > t.width)
      throw std::invalid_argument(std::string(where) + ": one out of bounds");
  std::set<int> seen;
  for (auto [r, c] : t.ones)
    if (!seen.insert(c).second)
      throw std::invalid_argument(std::string(where) +
                                  ": two ones in one column");
}

bool rowEmpty(const RectangleFilling& t, int row) {
  for (auto [r, c] : t.ones)
    if (r == row) return false;
  return true;
}

// Word of the filling with empty rows and columns ignored: for each nonempty
// column left to right, the rank of its one's row among nonempty rows.
Word wordOf(const RectangleFilling& t, std::vector<int>* nonemptyRowsOut,
            std::vector<int>* nonemptyColsOut) {
  std::map<int, int> colToRow;
  std::set<int> rowsUsed;
  for (auto [r, c] : t.ones) {
    colToRow[c] = r;
    rowsUsed.insert(r);
  }
  std::map<int, int> rowRank;
  int next = 1;
  for (int r : rowsUsed) rowRank[r] = next++;
  Word w;
  std::vector<int> cols;
  for (const auto& [c, r] : colToRow) {
    w.push_back(rowRank[r]);
    cols.push_back(c);
  }
  if (nonemptyRowsOut)
    nonemptyRowsOut->assign(rowsUsed.begin(), rowsUsed.end());
  if (nonemptyColsOut) *nonemptyColsOut = std::move(cols);
  return w;
}

RectangleFilling rebuild(int height, int width, const Word& w,
                         const std::vector<int>& nonemptyRows,
                         const std::vector<int>& nonemptyCols,
                         const char* where) {
  if (w.size() != nonemptyCols.size())
    throw std::logic_error(std::string(where) + ": word/column count clash");
  RectangleFilling out{height, width, {}};
  for (size_t i = 0; i < w.size(); ++i) {
    int letter = w[i];
    if (letter < 1 || letter > static_cast<int>(nonemptyRows.size()))
      throw std::logic_error(std::string(where) + ": letter has no row");
    out.ones.insert({nonemptyRows[letter - 1], nonemptyCols[i]});
  }
  return out;
}

}  // namespace

RectangleFilling phi(const RectangleFilling& t) {
  requireRect(t, "phi");
  if (t.ones.empty() || rowEmpty(t, 1)) {
    // cyclic shift: output top row empty, row k = input row k+1
    RectangleFilling out{t.height, t.width, {}};
    for (auto [r, c] : t.ones) out.ones.insert({r - 1, c});
    return out;
  }
  std::vector<int> rowsUsed, colsUsed;
  Word w = wordOf(t, &rowsUsed, &colsUsed);

  HeckePair pair = insertWord(w);
  IncreasingTableau pPrime = primeTransform(pair.p);
  Word wPrime;
  try {
    wPrime = recoverWord({pPrime, pair.q});
  } catch (const std::invalid_argument&) {
    throw std::logic_error("phi inconsistency: rewritten pair unrecoverable");
  }

  // Empty rows a_k (all > 1) become rows a_k - 1.
  std::set<int> emptyRows;
  for (int r = 1; r <= t.height; ++r) emptyRows.insert(r);
  for (int r : rowsUsed) emptyRows.erase(r);
  std::vector<int> targetRows;
  std::set<int> targetEmpty;
  for (int r : emptyRows) targetEmpty.insert(r - 1);
  for (int r = 1; r <= t.height; ++r)
    if (!targetEmpty.count(r)) targetRows.push_back(r);
  if (targetRows.size() != rowsUsed.size())
    throw std::logic_error("phi inconsistency: row bookkeeping");
  return rebuild(t.height, t.width, wPrime, targetRows, colsUsed, "phi");
}

RectangleFilling phiInverse(const RectangleFilling& t) {
  requireRect(t, "phiInverse");
  if (t.ones.empty() || rowEmpty(t, t.height)) {
    RectangleFilling out{t.height, t.width, {}};
    for (auto [r, c] : t.ones) out.ones.insert({r + 1, c});
    return out;
  }
  std::vector<int> rowsUsed, colsUsed;
  Word wPrime = wordOf(t, &rowsUsed, &colsUsed);

  HeckePair pair = insertWord(wPrime);
  IncreasingTableau p = inversePrimeTransform(pair.p);
  Word w;
  try {
    w = recoverWord({p, pair.q});
  } catch (const std::invalid_argument&) {
    throw std::logic_error("phi inconsistency: rewritten pair unrecoverable");
  }

  // Empty rows e_k become rows e_k + 1.
  std::set<int> emptyRows;
  for (int r = 1; r <= t.height; ++r) emptyRows.insert(r);
  for (int r : rowsUsed) emptyRows.erase(r);
  std::set<int> targetEmpty;
  for (int r : emptyRows) targetEmpty.insert(r + 1);
  std::vector<int> targetRows;
  for (int r = 1; r <= t.height; ++r)
    if (!targetEmpty.count(r)) targetRows.push_back(r);
  if (targetRows.size() != rowsUsed.size())
    throw std::logic_error("phiInverse inconsistency: row bookkeeping");
  return rebuild(t.height, t.width, w, targetRows, colsUsed, "phiInverse");
}

namespace detail {

namespace {

std::vector<std::pair<int, int>> rowIntervals(const Polyomino& m,
                                              const char* where) {
  std::vector<std::pair<int, int>> spans;
  for (int r = 1; r <= m.maxRow(); ++r) {
    auto span = m.rowSpan(r);
    if (!span)
      throw std::invalid_argument(std::string(where) + ": missing row");
    auto cells = m.rowCells(r);
    if (static_cast<int>(cells.size()) != span->second - span->first + 1)
      throw std::invalid_argument(std::string(where) + ": row not convex");
    spans.push_back(*span);
  }
  return spans;
}

Polyomino shapeFromIntervals(const std::vector<std::pair<int, int>>& spans) {
  std::set<PolyCell> cells;
  for (size_t i = 0; i < spans.size(); ++i)
    for (int c = spans[i].first; c <= spans[i].second; ++c)
      cells.insert({static_cast<int>(i) + 1, c});
  return Polyomino::fromCells(std::move(cells));
}

bool validMoveResult(const Polyomino& m) {
  auto tags = m.classify();
  return tags.count(ShapeClass::kMoon) > 0;
}

}  // namespace

MoveCertificate moveRowUpTarget(const Polyomino& m, int row) {
  auto spans = rowIntervals(m, "moveRowUpTarget");
  int rows = static_cast<int>(spans.size());
  if (row < 1 || row > rows)
    throw std::invalid_argument("moveRowUpTarget: no such row");

  std::pair<int, int> moved = spans[row - 1];
  std::vector<std::pair<int, int>> rest = spans;
  rest.erase(rest.begin() + (row - 1));

  MoveCertificate cert;
  cert.source = m;
  cert.movedRowFrom = row;
  bool found = false;
  for (int p = rows; p > row && !found; --p) {
    std::vector<std::pair<int, int>> candidate = rest;
    candidate.insert(candidate.begin() + (p - 1), moved);
    Polyomino target = shapeFromIntervals(candidate);
    if (validMoveResult(target)) {
      cert.target = std::move(target);
      cert.movedRowTo = p;
      found = true;
    }
  }
  if (!found)
    throw std::invalid_argument("moveRowUpTarget: nothing to move");

  // R: the largest rectangle of the source containing the moved row = the
  // moved row's columns crossed with every row whose span contains them.
  auto rectOf = [](const std::vector<std::pair<int, int>>& allSpans,
                   std::pair<int, int> span, const char* where) {
    std::vector<int> covering;
    for (size_t i = 0; i < allSpans.size(); ++i)
      if (allSpans[i].first <= span.first && span.second <= allSpans[i].second)
        covering.push_back(static_cast<int>(i) + 1);
    if (covering.empty())
      throw std::logic_error(std::string(where) + ": no covering rows");
    for (size_t i = 1; i < covering.size(); ++i)
      if (covering[i] != covering[i - 1] + 1)
        throw std::logic_error(std::string(where) + ": rectangle rows split");
    return RectSpan{covering.front(), covering.back(), span.first,
                    span.second};
  };
  cert.rect = rectOf(spans, moved, "moveRowUpTarget/R");
  auto targetSpans = rowIntervals(cert.target, "moveRowUpTarget");
  cert.rectPrime = rectOf(targetSpans, moved, "moveRowUpTarget/R'");
  if (cert.rect.rows() != cert.rectPrime.rows())
    throw std::logic_error("moveRowUpTarget: R and R' sizes differ");
  if (cert.rect.rowLo != row || cert.rectPrime.rowHi != cert.movedRowTo)
    throw std::logic_error(
        "moveRowUpTarget: moved row is not the bottom of R / top of R'");
  return cert;
}

Filling applyRowMove(const Filling& m, int row) {
  m.requireValid("applyRowMove");
  MoveCertificate cert = moveRowUpTarget(m.shape, row);
  const RectSpan& rect = cert.rect;
  const RectSpan& rectPrime = cert.rectPrime;

  RectangleFilling inside{rect.rows(), rect.cols(), {}};
  Filling out;
  out.shape = cert.target;
  for (auto [r, c] : m.ones) {
    bool inR = r >= rect.rowLo && r <= rect.rowHi && c >= rect.colLo &&
               c <= rect.colHi;
    if (inR) {
      inside.ones.insert({r - rect.rowLo + 1, c - rect.colLo + 1});
    } else if (r > cert.movedRowFrom && r <= cert.movedRowTo) {
      out.ones.insert({r - 1, c});
    } else {
      out.ones.insert({r, c});
    }
  }
  RectangleFilling mapped = phi(inside);
  for (auto [r, c] : mapped.ones)
    out.ones.insert({r + rectPrime.rowLo - 1, c + rectPrime.colLo - 1});
  out.requireValid("applyRowMove output");
  return out;
}

}  // namespace detail

MoveCertificate moveBottomRowTarget(const Polyomino& m) {
  if (!m.is(ShapeClass::kStack))
    throw std::invalid_argument("moveBottomRowTarget: not a stack polyomino");
  if (m.is(ShapeClass::kFerrersFrench))
    throw std::invalid_argument("moveBottomRowTarget: nothing to move");
  return detail::moveRowUpTarget(m, 1);
}

Filling applyF(const Filling& m) {
  if (!m.shape.is(ShapeClass::kStack))
    throw std::invalid_argument("applyF: not a stack polyomino");
  if (m.shape.is(ShapeClass::kFerrersFrench))
    throw std::invalid_argument("applyF: nothing to move");
  return detail::applyRowMove(m, 1);
}

std::pair<Filling, std::vector<MoveCertificate>> toFerrers(const Filling& m) {
  if (!m.shape.is(ShapeClass::kStack))
    throw std::invalid_argument("toFerrers: not a stack polyomino");
  Filling cur = m;
  std::vector<MoveCertificate> chain;
  int guard = m.shape.maxRow() * m.shape.maxRow() + 1;
  while (!cur.shape.is(ShapeClass::kFerrersFrench)) {
    if (--guard < 0) throw std::logic_error("toFerrers: move chain diverged");
    chain.push_back(moveBottomRowTarget(cur.shape));
    cur = detail::applyRowMove(cur, 1);
  }
  return {std::move(cur), std::move(chain)};
}

}  // namespace heckefill
