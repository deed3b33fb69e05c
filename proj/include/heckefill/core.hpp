#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace heckefill {

// A word is a (possibly empty) sequence of positive integers.
using Word = std::vector<int>;

// Integer partition: weakly decreasing positive parts, no trailing zeros.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int rows() const { return static_cast<int>(parts_.size()); }
  int cols() const { return parts_.empty() ? 0 : parts_.front(); }
  // 1-based row index; rows past the end have length 0.
  int part(int row) const;
  int cells() const;
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }

  bool contains(const Partition& other) const;
  Partition transposed() const;
  Partition unionWith(const Partition& other) const;
  Partition intersect(const Partition& other) const;
  Partition withBoxAdded(int row) const;
  Partition withBoxRemoved(int row) const;
  // If *this = smaller + exactly one box, the row of that box.
  std::optional<int> oneBoxRowAbove(const Partition& smaller) const;
  // Rows r such that (r, part(r)) is a corner (no box below or to the right).
  std::vector<int> cornerRows() const;

  bool operator==(const Partition&) const = default;
  bool operator<(const Partition& other) const { return parts_ < other.parts_; }
  std::string str() const;

 private:
  std::vector<int> parts_;
};

// Box position in English orientation: row 1 is the top row, col 1 leftmost.
struct Cell {
  int row = 0;
  int col = 0;
  bool operator==(const Cell&) const = default;
  bool operator<(const Cell& o) const {
    return row != o.row ? row < o.row : col < o.col;
  }
};

// First violated invariant of a tableau, or nothing when valid.
struct Violation {
  Cell cell;
  std::string reason;
};

// Straight-shape tableau with strictly increasing rows and columns.
// Construction is permissive; validate() reports violations.
class IncreasingTableau {
 public:
  IncreasingTableau() = default;
  explicit IncreasingTableau(std::vector<std::vector<int>> rows);

  bool empty() const { return rows_.empty(); }
  int rowCount() const { return static_cast<int>(rows_.size()); }
  int rowLength(int row) const;  // 1-based
  Partition shape() const;
  bool hasCell(Cell c) const;
  int at(Cell c) const;  // requires hasCell
  int maxEntry() const;  // 0 when empty
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  std::optional<Violation> validate() const;
  void requireValid(const char* where) const;

  bool operator==(const IncreasingTableau&) const = default;
  bool operator<(const IncreasingTableau& o) const { return rows_ < o.rows_; }
  std::string str() const;

 private:
  std::vector<std::vector<int>> rows_;
};

// Tableau of skew shape outer/inner; entries stored sparsely per cell.
class SkewIncreasingTableau {
 public:
  SkewIncreasingTableau() = default;
  SkewIncreasingTableau(Partition outer, Partition inner,
                        std::map<Cell, int> entries);
  static SkewIncreasingTableau fromStraight(const IncreasingTableau& t);

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  const std::map<Cell, int>& entries() const { return entries_; }
  bool hasEntry(Cell c) const { return entries_.count(c) > 0; }
  int at(Cell c) const { return entries_.at(c); }
  int maxEntry() const;

  std::optional<Violation> validate() const;
  void requireValid(const char* where) const;
  // Requires inner == empty and a full straight filling.
  IncreasingTableau toStraight() const;

  bool operator==(const SkewIncreasingTableau&) const = default;
  std::string str() const;

 private:
  Partition outer_;
  Partition inner_;
  std::map<Cell, int> entries_;
};

// Shape whose boxes hold nonempty integer sets; used for recording tableaux.
class SetValuedTableau {
 public:
  SetValuedTableau() = default;
  // Sets are normalized to sorted/deduplicated order.
  explicit SetValuedTableau(std::vector<std::vector<std::vector<int>>> rows);

  bool empty() const { return rows_.empty(); }
  Partition shape() const;
  const std::vector<std::vector<std::vector<int>>>& rows() const {
    return rows_;
  }
  const std::vector<int>& setAt(Cell c) const;

  std::optional<Violation> validate() const;
  // Extra recording-tableau invariant: entries form exactly {1..n}.
  std::optional<Violation> validateAsRecording() const;
  void requireValid(const char* where) const;

  // Mutators used while building a recording tableau.
  void addBoxWithValue(Cell c, int value);
  void appendValue(Cell c, int value);
  void removeValue(Cell c, int value);  // drops the box when it empties

  bool operator==(const SetValuedTableau&) const = default;
  std::string str() const;

 private:
  std::vector<std::vector<std::vector<int>>> rows_;
};

// Rows left to right, bottom row first.
Word readingWord(const IncreasingTableau& t);
Word readingWord(const SkewIncreasingTableau& t);

// Replace the i-th smallest distinct letter by i.
Word standardize(const Word& w);

std::string wordStr(const Word& w);

}  // namespace heckefill
