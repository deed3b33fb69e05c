#include "heckefill/core.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace heckefill {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw std::invalid_argument("partition parts must weakly decrease");
  }
}

int Partition::part(int row) const {
  if (row < 1 || row > rows()) return 0;
  return parts_[row - 1];
}

int Partition::cells() const {
  int total = 0;
  for (int p : parts_) total += p;
  return total;
}

bool Partition::contains(const Partition& other) const {
  if (other.rows() > rows()) return false;
  for (int r = 1; r <= other.rows(); ++r)
    if (part(r) < other.part(r)) return false;
  return true;
}

Partition Partition::transposed() const {
  if (parts_.empty()) return {};
  std::vector<int> t(parts_.front(), 0);
  for (int p : parts_)
    for (int c = 0; c < p; ++c) ++t[c];
  return Partition(std::move(t));
}

Partition Partition::unionWith(const Partition& other) const {
  std::vector<int> u(std::max(parts_.size(), other.parts_.size()));
  for (size_t i = 0; i < u.size(); ++i)
    u[i] = std::max(part(static_cast<int>(i) + 1),
                    other.part(static_cast<int>(i) + 1));
  return Partition(std::move(u));
}

Partition Partition::intersect(const Partition& other) const {
  std::vector<int> u(std::min(parts_.size(), other.parts_.size()));
  for (size_t i = 0; i < u.size(); ++i)
    u[i] = std::min(part(static_cast<int>(i) + 1),
                    other.part(static_cast<int>(i) + 1));
  return Partition(std::move(u));
}

Partition Partition::withBoxAdded(int row) const {
  if (row < 1 || row > rows() + 1)
    throw std::invalid_argument("withBoxAdded: bad row");
  std::vector<int> p = parts_;
  if (row == rows() + 1)
    p.push_back(1);
  else
    ++p[row - 1];
  return Partition(std::move(p));  // ctor rejects non-partitions
}

Partition Partition::withBoxRemoved(int row) const {
  if (row < 1 || row > rows())
    throw std::invalid_argument("withBoxRemoved: bad row");
  std::vector<int> p = parts_;
  --p[row - 1];
  return Partition(std::move(p));
}

std::optional<int> Partition::oneBoxRowAbove(const Partition& smaller) const {
  if (cells() != smaller.cells() + 1 || !contains(smaller)) return std::nullopt;
  for (int r = 1; r <= rows(); ++r)
    if (part(r) != smaller.part(r)) return r;
  return std::nullopt;
}

std::vector<int> Partition::cornerRows() const {
  std::vector<int> out;
  for (int r = 1; r <= rows(); ++r)
    if (part(r) > part(r + 1)) out.push_back(r);
  return out;
}

std::string Partition::str() const {
  if (parts_.empty()) return "()";
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

IncreasingTableau::IncreasingTableau(std::vector<std::vector<int>> rows)
    : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
}

int IncreasingTableau::rowLength(int row) const {
  if (row < 1 || row > rowCount()) return 0;
  return static_cast<int>(rows_[row - 1].size());
}

Partition IncreasingTableau::shape() const {
  std::vector<int> parts;
  parts.reserve(rows_.size());
  for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
  return Partition(std::move(parts));
}

bool IncreasingTableau::hasCell(Cell c) const {
  return c.row >= 1 && c.row <= rowCount() && c.col >= 1 &&
         c.col <= rowLength(c.row);
}

int IncreasingTableau::at(Cell c) const {
  if (!hasCell(c)) throw std::out_of_range("IncreasingTableau::at");
  return rows_[c.row - 1][c.col - 1];
}

int IncreasingTableau::maxEntry() const {
  int m = 0;
  for (const auto& r : rows_)
    for (int v : r) m = std::max(m, v);
  return m;
}

std::optional<Violation> IncreasingTableau::validate() const {
  for (int r = 1; r <= rowCount(); ++r) {
    if (rowLength(r) == 0)
      return Violation{{r, 1}, "empty row inside shape"};
    if (r > 1 && rowLength(r) > rowLength(r - 1))
      return Violation{{r, 1}, "row lengths do not weakly decrease"};
    for (int c = 1; c <= rowLength(r); ++c) {
      int v = rows_[r - 1][c - 1];
      if (v <= 0) return Violation{{r, c}, "entry not positive"};
      if (r > 1 && c <= rowLength(r - 1) && rows_[r - 2][c - 1] >= v)
        return Violation{{r, c}, "column not strictly increasing"};
      if (c > 1 && rows_[r - 1][c - 2] >= v)
        return Violation{{r, c}, "row not strictly increasing"};
    }
  }
  return std::nullopt;
}

void IncreasingTableau::requireValid(const char* where) const {
  if (auto v = validate())
    throw std::invalid_argument(std::string(where) + ": invalid tableau at (" +
                                std::to_string(v->cell.row) + "," +
                                std::to_string(v->cell.col) + "): " +
                                v->reason);
}

std::string IncreasingTableau::str() const {
  std::ostringstream os;
  for (const auto& r : rows_) {
    os << '[';
    for (size_t i = 0; i < r.size(); ++i) {
      if (i) os << ',';
      os << r[i];
    }
    os << ']';
  }
  return os.str();
}

SkewIncreasingTableau::SkewIncreasingTableau(Partition outer, Partition inner,
                                             std::map<Cell, int> entries)
    : outer_(std::move(outer)),
      inner_(std::move(inner)),
      entries_(std::move(entries)) {}

SkewIncreasingTableau SkewIncreasingTableau::fromStraight(
    const IncreasingTableau& t) {
  std::map<Cell, int> entries;
  for (int r = 1; r <= t.rowCount(); ++r)
    for (int c = 1; c <= t.rowLength(r); ++c)
      entries[{r, c}] = t.at({r, c});
  return {t.shape(), Partition(), std::move(entries)};
}

int SkewIncreasingTableau::maxEntry() const {
  int m = 0;
  for (const auto& [cell, v] : entries_) m = std::max(m, v);
  return m;
}

std::optional<Violation> SkewIncreasingTableau::validate() const {
  if (!outer_.contains(inner_))
    return Violation{{1, 1}, "inner shape not contained in outer"};
  for (int r = 1; r <= outer_.rows(); ++r)
    for (int c = inner_.part(r) + 1; c <= outer_.part(r); ++c)
      if (!entries_.count({r, c}))
        return Violation{{r, c}, "missing entry on skew cell"};
  for (const auto& [cell, v] : entries_) {
    if (cell.row < 1 || cell.col < 1 || cell.col > outer_.part(cell.row) ||
        cell.col <= inner_.part(cell.row))
      return Violation{cell, "entry outside skew shape"};
    if (v <= 0) return Violation{cell, "entry not positive"};
    auto left = entries_.find({cell.row, cell.col - 1});
    if (left != entries_.end() && left->second >= v)
      return Violation{cell, "row not strictly increasing"};
    auto up = entries_.find({cell.row - 1, cell.col});
    if (up != entries_.end() && up->second >= v)
      return Violation{cell, "column not strictly increasing"};
  }
  return std::nullopt;
}

void SkewIncreasingTableau::requireValid(const char* where) const {
  if (auto v = validate())
    throw std::invalid_argument(std::string(where) +
                                ": invalid skew tableau at (" +
                                std::to_string(v->cell.row) + "," +
                                std::to_string(v->cell.col) + "): " +
                                v->reason);
}

IncreasingTableau SkewIncreasingTableau::toStraight() const {
  if (!inner_.empty())
    throw std::invalid_argument("toStraight: inner shape not empty");
  std::vector<std::vector<int>> rows(outer_.rows());
  for (int r = 1; r <= outer_.rows(); ++r) {
    rows[r - 1].resize(outer_.part(r));
    for (int c = 1; c <= outer_.part(r); ++c)
      rows[r - 1][c - 1] = entries_.at({r, c});
  }
  return IncreasingTableau(std::move(rows));
}

std::string SkewIncreasingTableau::str() const {
  std::ostringstream os;
  for (int r = 1; r <= outer_.rows(); ++r) {
    os << '[';
    for (int c = 1; c <= outer_.part(r); ++c) {
      if (c > 1) os << ',';
      if (c <= inner_.part(r))
        os << '.';
      else if (auto it = entries_.find({r, c}); it != entries_.end())
        os << it->second;
      else
        os << '?';
    }
    os << ']';
  }
  return os.str();
}

SetValuedTableau::SetValuedTableau(
    std::vector<std::vector<std::vector<int>>> rows)
    : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  for (auto& row : rows_)
    for (auto& cell : row) {
      std::sort(cell.begin(), cell.end());
      cell.erase(std::unique(cell.begin(), cell.end()), cell.end());
    }
}

Partition SetValuedTableau::shape() const {
  std::vector<int> parts;
  parts.reserve(rows_.size());
  for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
  return Partition(std::move(parts));
}

const std::vector<int>& SetValuedTableau::setAt(Cell c) const {
  return rows_.at(c.row - 1).at(c.col - 1);
}

std::optional<Violation> SetValuedTableau::validate() const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].empty())
      return Violation{{static_cast<int>(r) + 1, 1}, "empty row inside shape"};
    if (r > 0 && rows_[r].size() > rows_[r - 1].size())
      return Violation{{static_cast<int>(r) + 1, 1},
                       "row lengths do not weakly decrease"};
    for (size_t c = 0; c < rows_[r].size(); ++c) {
      Cell cell{static_cast<int>(r) + 1, static_cast<int>(c) + 1};
      const auto& s = rows_[r][c];
      if (s.empty()) return Violation{cell, "empty set"};
      if (s.front() <= 0) return Violation{cell, "set entry not positive"};
      if (c > 0 && rows_[r][c - 1].back() >= s.front())
        return Violation{cell, "max of left box not below min of this box"};
      if (r > 0 && c < rows_[r - 1].size() &&
          rows_[r - 1][c].back() >= s.front())
        return Violation{cell, "max of box above not below min of this box"};
    }
  }
  return std::nullopt;
}

std::optional<Violation> SetValuedTableau::validateAsRecording() const {
  if (auto v = validate()) return v;
  std::map<int, int> seen;
  int total = 0;
  for (const auto& row : rows_)
    for (const auto& cell : row)
      for (int v : cell) {
        ++seen[v];
        ++total;
      }
  for (int k = 1; k <= total; ++k)
    if (seen[k] != 1)
      return Violation{{0, 0}, "values are not exactly 1..n"};
  return std::nullopt;
}

void SetValuedTableau::requireValid(const char* where) const {
  if (auto v = validate())
    throw std::invalid_argument(std::string(where) +
                                ": invalid set-valued tableau at (" +
                                std::to_string(v->cell.row) + "," +
                                std::to_string(v->cell.col) + "): " +
                                v->reason);
}

void SetValuedTableau::addBoxWithValue(Cell c, int value) {
  if (c.row == static_cast<int>(rows_.size()) + 1) rows_.emplace_back();
  auto& row = rows_.at(c.row - 1);
  if (c.col != static_cast<int>(row.size()) + 1)
    throw std::invalid_argument("addBoxWithValue: not the next box in row");
  row.push_back({value});
}

void SetValuedTableau::appendValue(Cell c, int value) {
  auto& s = rows_.at(c.row - 1).at(c.col - 1);
  s.insert(std::upper_bound(s.begin(), s.end(), value), value);
}

void SetValuedTableau::removeValue(Cell c, int value) {
  auto& row = rows_.at(c.row - 1);
  auto& s = row.at(c.col - 1);
  auto it = std::find(s.begin(), s.end(), value);
  if (it == s.end()) throw std::invalid_argument("removeValue: value absent");
  s.erase(it);
  if (s.empty()) {
    if (c.col != static_cast<int>(row.size()))
      throw std::invalid_argument("removeValue: emptied a non-corner box");
    row.pop_back();
    if (row.empty()) rows_.pop_back();
  }
}

std::string SetValuedTableau::str() const {
  std::ostringstream os;
  for (const auto& r : rows_) {
    os << '[';
    for (size_t c = 0; c < r.size(); ++c) {
      if (c) os << ',';
      os << '{';
      for (size_t i = 0; i < r[c].size(); ++i) {
        if (i) os << ',';
        os << r[c][i];
      }
      os << '}';
    }
    os << ']';
  }
  return os.str();
}

Word readingWord(const IncreasingTableau& t) {
  Word w;
  for (int r = t.rowCount(); r >= 1; --r)
    for (int c = 1; c <= t.rowLength(r); ++c) w.push_back(t.at({r, c}));
  return w;
}

Word readingWord(const SkewIncreasingTableau& t) {
  Word w;
  for (int r = t.outer().rows(); r >= 1; --r)
    for (int c = t.inner().part(r) + 1; c <= t.outer().part(r); ++c)
      w.push_back(t.at({r, c}));
  return w;
}

Word standardize(const Word& w) {
  std::map<int, int> rank;
  for (int x : w) rank[x] = 0;
  int next = 1;
  for (auto& [letter, r] : rank) r = next++;
  Word out;
  out.reserve(w.size());
  for (int x : w) out.push_back(rank[x]);
  return out;
}

std::string wordStr(const Word& w) {
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << w[i];
  }
  return os.str();
}

}  // namespace heckefill
