#include "heckefill/growth.hpp"

#include <algorithm>
#include <stdexcept>

namespace heckefill {

namespace {

[[noreturn]] void inconsistent(const char* what) {
  throw std::invalid_argument(std::string("inconsistent square: ") + what);
}

}  // namespace

BinaryGrid matrixRep(const Word& w) {
  BinaryGrid g;
  g.cols = static_cast<int>(w.size());
  for (size_t j = 0; j < w.size(); ++j) {
    if (w[j] < 1) throw std::invalid_argument("matrixRep: letters must be >= 1");
    g.rows = std::max(g.rows, w[j]);
    g.marks.insert({w[j], static_cast<int>(j) + 1});
  }
  return g;
}

SquareResult forwardSquare(const SquareConfig& sq) {
  const Partition& lam = sq.lambda;
  const Partition& mu = sq.mu;
  const Partition& nu = sq.nu;
  if (!mu.contains(lam) || !nu.contains(lam))
    inconsistent("corner chain not increasing");

  if (sq.hasX) {
    if (lam != nu) inconsistent("marked square with nonempty column below");
    if (sq.bottomLabel) inconsistent("marked square with bottom label");
    if (mu.part(1) == nu.part(1))
      return {mu.withBoxAdded(1), std::nullopt};  // F1
    // F2: plateau labeled by the row of the highest inner corner of mu.
    auto cornersOfMu = mu.cornerRows();
    if (cornersOfMu.empty()) inconsistent("marked square with empty mu");
    return {mu, cornersOfMu.front()};
  }

  if (sq.bottomLabel) {
    int i = *sq.bottomLabel;
    if (nu != lam) inconsistent("bottom label on a growing edge");
    if (i < 1 || nu.part(i) < 1 || nu.part(i + 1) >= nu.part(i))
      inconsistent("bottom label does not point at a corner of nu");
    if (!mu.contains(nu)) inconsistent("labeled square with nu not in mu");
    bool boxRight = mu.part(i) > nu.part(i);
    bool boxBelow = mu.part(i + 1) >= nu.part(i) && nu.part(i + 1) < nu.part(i);
    if (boxRight) {
      if (mu.part(i + 1) > nu.part(i + 1)) return {mu, i + 1};  // F10
      return {mu.withBoxAdded(i + 1), std::nullopt};            // F9
    }
    if (boxBelow) return {mu, i + 1};  // F8
    return {mu, i};                    // F7
  }

  if (mu == lam) return {nu, std::nullopt};  // F3
  if (nu == lam) return {mu, std::nullopt};  // F3
  if (!mu.contains(nu)) return {mu.unionWith(nu), std::nullopt};  // F4
  // F5/F6: nu grew from lam by one box in row i.
  auto i = nu.oneBoxRowAbove(lam);
  if (!i) inconsistent("nu/lambda is not a single box");
  if (mu.part(*i + 1) > nu.part(*i + 1)) return {mu, *i + 1};  // F6
  return {mu.withBoxAdded(*i + 1), std::nullopt};              // F5
}

SquareConfig backwardSquare(const Partition& gamma, const Partition& mu,
                            const Partition& nu, std::optional<int> topLabel) {
  std::vector<SquareConfig> candidates;
  auto add = [&](Partition lam, std::optional<int> bottom, bool hasX) {
    SquareConfig cand{std::move(lam), mu, nu, bottom, hasX};
    if (std::find(candidates.begin(), candidates.end(), cand) ==
        candidates.end())
      candidates.push_back(std::move(cand));
  };

  if (!topLabel) {
    add(mu, std::nullopt, false);                 // inverse F3 (gamma == nu)
    add(nu, std::nullopt, false);                 // inverse F3 (gamma == mu)
    add(mu.intersect(nu), std::nullopt, false);   // inverse F4
    add(nu, std::nullopt, true);                  // inverse F1
    if (auto k = gamma.oneBoxRowAbove(mu); k && *k >= 2) {
      if (nu.part(*k - 1) > nu.part(*k))
        add(nu.withBoxRemoved(*k - 1), std::nullopt, false);  // inverse F5
      add(nu, *k - 1, false);                                 // inverse F9
    }
  } else {
    int L = *topLabel;
    add(nu, std::nullopt, true);  // inverse F2
    if (L >= 2 && nu.part(L - 1) > nu.part(L))
      add(nu.withBoxRemoved(L - 1), std::nullopt, false);  // inverse F6
    add(nu, L, false);                                     // inverse F7
    if (L >= 2) add(nu, L - 1, false);                     // inverse F8/F10
  }

  std::vector<SquareConfig> matches;
  for (const auto& cand : candidates) {
    try {
      SquareResult out = forwardSquare(cand);
      if (out.gamma == gamma && out.topLabel == topLabel)
        matches.push_back(cand);
    } catch (const std::invalid_argument&) {
      // candidate shape not realizable; skip
    }
  }
  if (matches.empty()) inconsistent("no preimage under the forward rules");
  if (matches.size() > 1)
    throw std::logic_error(
        "backwardSquare: ambiguous preimage; square class not covered by the "
        "inversion");
  return matches.front();
}

int GrowthDiagram::height(int col) const {
  if (col < 1 || col > cols()) return 0;
  return heights_[col - 1];
}

int GrowthDiagram::maxHeight() const {
  return heights_.empty() ? 0 : heights_.front();
}

const Partition& GrowthDiagram::corner(int i, int j) const {
  return corners_.at({i, j});
}

std::optional<int> GrowthDiagram::topEdgeLabel(int col, int level) const {
  auto it = edges_.find({col, level});
  if (it == edges_.end()) return std::nullopt;
  return it->second;
}

GrowthDiagram GrowthDiagram::build(const BinaryGrid& grid) {
  return buildRegion(std::vector<int>(grid.cols, grid.rows), grid.marks);
}

GrowthDiagram GrowthDiagram::buildRegion(
    std::vector<int> heights, const std::set<std::pair<int, int>>& marks) {
  for (size_t i = 0; i + 1 < heights.size(); ++i)
    if (heights[i] < heights[i + 1])
      throw std::invalid_argument("buildRegion: heights must weakly decrease");
  std::set<int> seenCols;
  for (auto [r, c] : marks) {
    if (c < 1 || c > static_cast<int>(heights.size()) || r < 1 ||
        r > heights[c - 1])
      throw std::invalid_argument("buildRegion: mark outside region");
    if (!seenCols.insert(c).second)
      throw std::invalid_argument("buildRegion: two marks in one column");
  }

  GrowthDiagram d;
  d.heights_ = std::move(heights);
  d.marks_ = marks;
  int n = d.cols();
  for (int i = 0; i <= n; ++i) d.corners_[{i, 0}] = Partition();
  for (int j = 0; j <= (n ? d.heights_[0] : 0); ++j)
    d.corners_[{0, j}] = Partition();

  for (int j = 1; j <= d.maxHeight(); ++j)
    for (int i = 1; i <= n && d.height(i) >= j; ++i) {
      SquareConfig sq;
      sq.lambda = d.corners_.at({i - 1, j - 1});
      sq.mu = d.corners_.at({i - 1, j});
      sq.nu = d.corners_.at({i, j - 1});
      if (auto it = d.edges_.find({i, j - 1}); it != d.edges_.end())
        sq.bottomLabel = it->second;
      sq.hasX = d.marks_.count({j, i}) > 0;
      SquareResult out = forwardSquare(sq);
      d.corners_[{i, j}] = std::move(out.gamma);
      if (out.topLabel) d.edges_[{i, j}] = *out.topLabel;
    }
  return d;
}

RegionBorders borders(const GrowthDiagram& d) {
  RegionBorders b;
  b.heights = d.heights();
  int n = d.cols();
  auto keep = [&](int i, int j) { b.corners[{i, j}] = d.corner(i, j); };
  keep(n, 0);
  for (int j = 1; j <= d.height(n); ++j) keep(n, j);
  for (int i = n - 1; i >= 0; --i) {
    int lo = d.height(i + 1);
    int hi = i >= 1 ? d.height(i) : d.height(1);
    for (int j = lo; j <= hi; ++j) keep(i, j);
  }
  for (int i = 1; i <= n; ++i)
    if (auto l = d.topEdgeLabel(i, d.height(i))) b.colLabels[i] = *l;
  return b;
}

BinaryGrid unbuildGrowth(const RegionBorders& b) {
  const std::vector<int>& heights = b.heights;
  int n = static_cast<int>(heights.size());
  int maxH = n ? heights[0] : 0;

  std::map<std::pair<int, int>, Partition> corners;
  std::map<std::pair<int, int>, int> edges;
  for (int i = 0; i <= n; ++i) corners[{i, 0}] = Partition();
  for (int j = 0; j <= maxH; ++j) corners[{0, j}] = Partition();
  for (const auto& [key, part] : b.corners) {
    auto it = corners.find(key);
    if (it != corners.end() && !(it->second == part))
      inconsistent("border disagrees with the empty boundary");
    corners[key] = part;
  }
  for (const auto& [col, label] : b.colLabels) {
    if (col < 1 || col > n || heights[col - 1] < 1)
      inconsistent("label on a column with no squares");
    edges[{col, heights[col - 1]}] = label;
  }

  BinaryGrid grid;
  grid.rows = maxH;
  grid.cols = n;
  for (int j = maxH; j >= 1; --j)
    for (int i = n; i >= 1; --i) {
      if (heights[i - 1] < j) continue;
      auto git = corners.find({i, j});
      auto mit = corners.find({i - 1, j});
      auto nit = corners.find({i, j - 1});
      if (git == corners.end() || mit == corners.end() ||
          nit == corners.end())
        inconsistent("missing border corner during backward sweep");
      std::optional<int> topLabel;
      if (auto it = edges.find({i, j}); it != edges.end())
        topLabel = it->second;
      SquareConfig sq =
          backwardSquare(git->second, mit->second, nit->second, topLabel);
      auto [lit, inserted] = corners.insert({{i - 1, j - 1}, sq.lambda});
      if (!inserted && !(lit->second == sq.lambda))
        inconsistent("backward sweep corner clash");
      if (sq.bottomLabel) {
        if (j == 1) inconsistent("label on the bottom boundary");
        edges[{i, j - 1}] = *sq.bottomLabel;
      }
      if (sq.hasX) {
        auto [it2, fresh] = grid.marks.insert({j, i});
        if (!fresh) inconsistent("duplicate mark");
      }
    }
  for (auto [r, c] : grid.marks) {
    int count = 0;
    for (auto [r2, c2] : grid.marks)
      if (c2 == c) ++count;
    if (count > 1) inconsistent("two marks in one column");
    (void)r;
  }
  return grid;
}

HeckePair extractPQ(const GrowthDiagram& d) {
  int n = d.cols();
  for (int c : d.heights())
    if (c != d.maxHeight())
      throw std::invalid_argument("extractPQ: diagram is not a rectangle");
  int rows = d.maxHeight();

  // P from the right border chain.
  std::vector<std::vector<int>> pRows;
  for (int j = 1; j <= rows; ++j) {
    const Partition& prev = d.corner(n, j - 1);
    const Partition& cur = d.corner(n, j);
    if (!cur.contains(prev)) inconsistent("right border not increasing");
    for (int r = 1; r <= cur.rows(); ++r) {
      if (static_cast<int>(pRows.size()) < r) pRows.emplace_back();
      for (int c = prev.part(r) + 1; c <= cur.part(r); ++c)
        pRows[r - 1].push_back(j);
    }
  }
  IncreasingTableau p(std::move(pRows));

  // Q from the top border chain with labeled plateau steps.
  SetValuedTableau q;
  for (int i = 1; i <= n; ++i) {
    const Partition& prev = d.corner(i - 1, rows);
    const Partition& cur = d.corner(i, rows);
    if (cur == prev) {
      auto label = d.topEdgeLabel(i, rows);
      if (!label) inconsistent("plateau step without label on top border");
      q.appendValue({*label, cur.part(*label)}, i);
    } else {
      auto r = cur.oneBoxRowAbove(prev);
      if (!r) inconsistent("top border step adds more than one box");
      q.addBoxWithValue({*r, cur.part(*r)}, i);
    }
  }
  return {std::move(p), std::move(q)};
}

}  // namespace heckefill
