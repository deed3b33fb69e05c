#pragma once

#include <functional>
#include <vector>

#include "heckefill/core.hpp"

namespace heckefill::testing {

// All words of length minLen..maxLen over the alphabet {1..alphabet}.
inline void forAllWords(int maxLen, int alphabet,
                        const std::function<void(const Word&)>& f,
                        int minLen = 0) {
  for (int len = minLen; len <= maxLen; ++len) {
    Word w(len, 1);
    while (true) {
      f(w);
      int i = 0;
      while (i < len && w[i] == alphabet) w[i++] = 1;
      if (i == len) break;
      ++w[i];
    }
    if (len == 0) continue;
  }
}

// All valid increasing tableaux with shape inside rows x cols and entries
// bounded by maxEntry (the empty tableau included).
inline std::vector<IncreasingTableau> allIncreasingTableaux(int rows, int cols,
                                                            int maxEntry) {
  std::vector<IncreasingTableau> out;
  std::vector<std::vector<int>> shapes;
  std::function<void(std::vector<int>&, int)> shapeRec =
      [&](std::vector<int>& parts, int prev) {
        shapes.push_back(parts);
        if (static_cast<int>(parts.size()) == rows) return;
        for (int next = 1; next <= prev; ++next) {
          parts.push_back(next);
          shapeRec(parts, next);
          parts.pop_back();
        }
      };
  std::vector<int> start;
  shapeRec(start, cols);
  for (const auto& parts : shapes) {
    Partition shape{std::vector<int>(parts)};
    std::vector<Cell> cells;
    for (int r = 1; r <= shape.rows(); ++r)
      for (int c = 1; c <= shape.part(r); ++c) cells.push_back({r, c});
    std::vector<std::vector<int>> grid(shape.rows());
    for (int r = 1; r <= shape.rows(); ++r) grid[r - 1].resize(shape.part(r));
    std::function<void(size_t)> fill = [&](size_t idx) {
      if (idx == cells.size()) {
        IncreasingTableau t(grid);
        if (!t.validate()) out.push_back(t);
        return;
      }
      auto [r, c] = cells[idx];
      int lo = 1;
      if (c > 1) lo = std::max(lo, grid[r - 1][c - 2] + 1);
      if (r > 1) lo = std::max(lo, grid[r - 2][c - 1] + 1);
      for (int v = lo; v <= maxEntry; ++v) {
        grid[r - 1][c - 1] = v;
        fill(idx + 1);
      }
      grid[r - 1][c - 1] = 0;
    };
    fill(0);
  }
  return out;
}

}  // namespace heckefill::testing
