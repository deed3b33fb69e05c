#include "heckefill/linked.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "heckefill/bijection.hpp"
#include "heckefill/growth.hpp"

namespace heckefill {

std::optional<std::string> LinkedPartition::validate() const {
  if (n < 0) return "n must be nonnegative";
  std::set<int> covered;
  for (const auto& b : blocks) {
    if (b.empty()) return "empty block";
    for (size_t i = 0; i < b.size(); ++i) {
      if (b[i] < 1 || b[i] > n) return "element outside [n]";
      if (i > 0 && b[i - 1] >= b[i]) return "block not strictly sorted";
      covered.insert(b[i]);
    }
  }
  if (static_cast<int>(covered.size()) != n) return "blocks do not cover [n]";
  for (size_t i = 0; i < blocks.size(); ++i)
    for (size_t j = i + 1; j < blocks.size(); ++j) {
      const auto& bi = blocks[i];
      const auto& bj = blocks[j];
      std::vector<int> common;
      std::set_intersection(bi.begin(), bi.end(), bj.begin(), bj.end(),
                            std::back_inserter(common));
      for (int t : common) {
        bool okI = t == bi.front() && bi.size() > 1 && t != bj.front();
        bool okJ = t == bj.front() && bj.size() > 1 && t != bi.front();
        if (!okI && !okJ)
          return "blocks " + std::to_string(i) + " and " + std::to_string(j) +
                 " are not nearly disjoint at " + std::to_string(t);
      }
    }
  return std::nullopt;
}

void LinkedPartition::requireValid(const char* where) const {
  if (auto err = validate())
    throw std::invalid_argument(std::string(where) + ": " + *err);
}

std::string LinkedPartition::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) os << " | ";
    for (size_t j = 0; j < blocks[i].size(); ++j) {
      if (j) os << ' ';
      os << blocks[i][j];
    }
  }
  return os.str();
}

LinkedPartition makeLinkedPartition(int n,
                                    std::vector<std::vector<int>> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.front() < b.front();
            });
  LinkedPartition p{n, std::move(blocks)};
  p.requireValid("makeLinkedPartition");
  return p;
}

LinkedPartition parseLinkedPartition(int n, const std::string& text) {
  std::vector<std::vector<int>> blocks;
  std::stringstream ss(text);
  std::string blockText;
  while (std::getline(ss, blockText, '|')) {
    std::vector<int> block;
    std::stringstream bs(blockText);
    int x;
    while (bs >> x) block.push_back(x);
    if (!block.empty()) blocks.push_back(std::move(block));
  }
  if (n == 0)
    for (const auto& b : blocks)
      for (int x : b) n = std::max(n, x);
  return makeLinkedPartition(n, std::move(blocks));
}

ArcSet standardRep(const LinkedPartition& p) {
  p.requireValid("standardRep");
  ArcSet arcs;
  for (const auto& b : p.blocks)
    for (size_t i = 1; i < b.size(); ++i) arcs.insert({b.front(), b[i]});
  return arcs;
}

LinkedPartition fromArcs(int n, const ArcSet& arcs) {
  std::map<int, std::vector<int>> byFirst;
  std::set<int> used;
  for (auto [i, j] : arcs) {
    if (i >= j) throw std::invalid_argument("fromArcs: arc must have i < j");
    byFirst[i].push_back(j);
    used.insert(i);
    used.insert(j);
  }
  std::vector<std::vector<int>> blocks;
  for (auto& [i, rest] : byFirst) {
    std::vector<int> b{i};
    b.insert(b.end(), rest.begin(), rest.end());
    blocks.push_back(std::move(b));
  }
  for (int x = 1; x <= n; ++x)
    if (!used.count(x)) blocks.push_back({x});
  return makeLinkedPartition(n, std::move(blocks));
}

namespace {

int maxCliqueSize(const std::vector<std::pair<int, int>>& arcs,
                  bool crossing) {
  // pairwise condition for a < b ordered by first component:
  //   crossing: i_a < i_b < j_a < j_b      nesting: i_a < i_b, j_b < j_a
  auto compatible = [&](std::pair<int, int> a, std::pair<int, int> b) {
    if (a.first == b.first) return false;
    if (a.first > b.first) std::swap(a, b);
    if (crossing) return b.first < a.second && a.second < b.second;
    return b.second < a.second;
  };
  int n = static_cast<int>(arcs.size());
  int best = 0;
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int next) -> void {
    best = std::max(best, static_cast<int>(chosen.size()));
    if (static_cast<int>(chosen.size()) + (n - next) <= best) return;
    for (int k = next; k < n; ++k) {
      bool ok = true;
      for (int c : chosen)
        if (!compatible(arcs[c], arcs[k])) {
          ok = false;
          break;
        }
      if (ok) {
        chosen.push_back(k);
        self(self, k + 1);
        chosen.pop_back();
      }
    }
  };
  rec(rec, 0);
  return best;
}

}  // namespace

int cross(const LinkedPartition& p) {
  ArcSet arcs = standardRep(p);
  return maxCliqueSize({arcs.begin(), arcs.end()}, /*crossing=*/true);
}

int nest(const LinkedPartition& p) {
  ArcSet arcs = standardRep(p);
  return maxCliqueSize({arcs.begin(), arcs.end()}, /*crossing=*/false);
}

std::set<int> comp1(const LinkedPartition& p) {
  std::set<int> out;
  for (auto [i, j] : standardRep(p)) out.insert(i);
  return out;
}

std::set<int> comp2(const LinkedPartition& p) {
  std::set<int> out;
  for (auto [i, j] : standardRep(p)) out.insert(j);
  return out;
}

namespace {

Polyomino staircaseShape(int n) {
  std::vector<int> lengths;
  for (int len = n - 1; len >= 1; --len) lengths.push_back(len);
  return Polyomino::fromRowSpec(lengths);
}

// Growth-diagram region of the staircase: column C holds n-C squares, plus
// the extra empty column.
std::vector<int> staircaseHeights(int n) {
  std::vector<int> h;
  for (int c = 1; c <= n; ++c) h.push_back(n - c);
  return h;
}

}  // namespace

Filling toTriangleFilling(const LinkedPartition& p) {
  p.requireValid("toTriangleFilling");
  if (p.n < 1)
    throw std::invalid_argument("toTriangleFilling: n must be >= 1");
  Filling f;
  f.shape = staircaseShape(p.n);
  for (auto [i, j] : standardRep(p)) f.ones.insert({i, p.n + 1 - j});
  f.requireValid("toTriangleFilling output");
  return f;
}

LinkedPartition fromTriangleFilling(const Filling& f) {
  f.requireValid("fromTriangleFilling");
  int n = f.shape.maxRow() + 1;
  if (!(f.shape == staircaseShape(n)))
    throw std::invalid_argument("fromTriangleFilling: not a staircase shape");
  ArcSet arcs;
  for (auto [r, c] : f.ones) arcs.insert({r, n + 1 - c});
  return fromArcs(n, arcs);
}

LinkedPartition ourBijection(const LinkedPartition& p) {
  if (p.n < 1) throw std::invalid_argument("ourBijection: n must be >= 1");
  if (p.n == 1) return p;
  Filling up = toTriangleFilling(p).reflectedVertically();
  auto [down, chain] = toFerrers(up);
  (void)chain;
  return fromTriangleFilling(down);
}

LinkedPartition cgpBijection(const LinkedPartition& p) {
  if (p.n < 1) throw std::invalid_argument("cgpBijection: n must be >= 1");
  if (p.n == 1) return p;
  Filling f = toTriangleFilling(p);
  GrowthDiagram d = GrowthDiagram::buildRegion(staircaseHeights(p.n), f.ones);
  RegionBorders b = borders(d);

  RegionBorders transposed;
  transposed.heights = b.heights;
  for (const auto& [key, part] : b.corners)
    transposed.corners[key] = part.transposed();
  for (const auto& [col, rowLabel] : b.colLabels) {
    // marked corner at the end of row `rowLabel`; transposing sends it to
    // the end of row lambda_rowLabel of the transposed partition
    const Partition& plateau = d.corner(col, d.height(col));
    int newLabel = plateau.part(rowLabel);
    if (newLabel < 1)
      throw std::logic_error("cgpBijection: label points outside partition");
    transposed.colLabels[col] = newLabel;
  }

  BinaryGrid marks = unbuildGrowth(transposed);
  Filling out;
  out.shape = f.shape;
  for (auto [r, c] : marks.marks) out.ones.insert({r, c});
  return fromTriangleFilling(out);
}

std::vector<BorderStep> vacillatingBorder(const LinkedPartition& p) {
  if (p.n < 1)
    throw std::invalid_argument("vacillatingBorder: n must be >= 1");
  std::vector<BorderStep> out;
  if (p.n == 1) {
    out.push_back({Partition(), std::nullopt});
    out.push_back({Partition(), std::nullopt});
    return out;
  }
  Filling f = toTriangleFilling(p);
  GrowthDiagram d = GrowthDiagram::buildRegion(staircaseHeights(p.n), f.ones);
  int n = p.n;
  // Path from (n, 0) to (0, n-1): alternate left and up steps; a left step
  // across a labeled top edge marks the corner it leaves.
  out.push_back({d.corner(n, 0), std::nullopt});
  for (int i = n - 1; i >= 0; --i) {
    int level = d.height(i + 1);
    // left step from (i+1, level) to (i, level); the label, if any, sits on
    // the top edge of square (i+1, level) and marks the previous entry.
    if (auto l = d.topEdgeLabel(i + 1, level)) out.back().markRow = *l;
    out.push_back({d.corner(i, level), std::nullopt});
    int hi = i >= 1 ? d.height(i) : d.height(1);
    for (int j = level + 1; j <= hi; ++j)
      out.push_back({d.corner(i, j), std::nullopt});
  }
  out.push_back({Partition(), std::nullopt});  // hypotenuse endpoint
  return out;
}

}  // namespace heckefill
