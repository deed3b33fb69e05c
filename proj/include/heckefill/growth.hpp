#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "heckefill/core.hpp"
#include "heckefill/insertion.hpp"

namespace heckefill {

// 01-grid with rows counted bottom-to-top; at most one mark per column.
struct BinaryGrid {
  int rows = 0;
  int cols = 0;
  std::set<std::pair<int, int>> marks;  // (row, col), 1-based
  bool operator==(const BinaryGrid&) const = default;
};

// One mark per column j at row w_j.
BinaryGrid matrixRep(const Word& w);

// The four known corners of a square plus its bottom-edge label and filling.
struct SquareConfig {
  Partition lambda;  // bottom-left
  Partition mu;      // top-left
  Partition nu;      // bottom-right
  std::optional<int> bottomLabel;
  bool hasX = false;
  bool operator==(const SquareConfig&) const = default;
};

struct SquareResult {
  Partition gamma;  // top-right
  std::optional<int> topLabel;
  bool operator==(const SquareResult&) const = default;
};

// Applies the unique matching local rule; throws "inconsistent square".
SquareResult forwardSquare(const SquareConfig& sq);

// Unique preimage of forwardSquare, certified by replaying it; throws
// "inconsistent square" when none exists.
SquareConfig backwardSquare(const Partition& gamma, const Partition& mu,
                            const Partition& nu, std::optional<int> topLabel);

// Growth diagram over a Young-diagram-shaped region of squares.
// heights[i] = number of squares in column i+1, weakly decreasing; the
// rectangle of a word has all heights equal.
class GrowthDiagram {
 public:
  static GrowthDiagram build(const BinaryGrid& grid);
  static GrowthDiagram buildRegion(std::vector<int> heights,
                                   const std::set<std::pair<int, int>>& marks);

  int cols() const { return static_cast<int>(heights_.size()); }
  int height(int col) const;  // 1-based; 0 past the end
  int maxHeight() const;
  const std::vector<int>& heights() const { return heights_; }
  const std::set<std::pair<int, int>>& marks() const { return marks_; }

  const Partition& corner(int i, int j) const;  // 0-based corner lattice
  // Label of the top edge of square (col, level), both 1-based.
  std::optional<int> topEdgeLabel(int col, int level) const;

  const std::map<std::pair<int, int>, Partition>& corners() const {
    return corners_;
  }
  const std::map<std::pair<int, int>, int>& edgeLabels() const {
    return edges_;
  }

 private:
  std::vector<int> heights_;
  std::set<std::pair<int, int>> marks_;
  std::map<std::pair<int, int>, Partition> corners_;
  std::map<std::pair<int, int>, int> edges_;
};

// Border data sufficient to reconstruct a diagram backwards.
struct RegionBorders {
  std::vector<int> heights;
  // Corner partitions on the upper-right staircase path.
  std::map<std::pair<int, int>, Partition> corners;
  // col -> label of the top edge of that column's topmost square.
  std::map<int, int> colLabels;
};

RegionBorders borders(const GrowthDiagram& d);

// Rebuilds the diagram by the backward rules and returns its marks.
// Throws "inconsistent square" when the borders are not realizable.
BinaryGrid unbuildGrowth(const RegionBorders& b);

// (P, Q) read off the right and top borders of a word's rectangle diagram.
HeckePair extractPQ(const GrowthDiagram& d);

}  // namespace heckefill
