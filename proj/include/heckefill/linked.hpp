#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "heckefill/core.hpp"
#include "heckefill/polyomino.hpp"

namespace heckefill {

// Blocks covering [n], pairwise nearly disjoint; blocks kept sorted by
// minimum with sorted elements.
struct LinkedPartition {
  int n = 0;
  std::vector<std::vector<int>> blocks;
  std::optional<std::string> validate() const;
  void requireValid(const char* where) const;
  bool operator==(const LinkedPartition&) const = default;
  std::string str() const;  // pipe-separated blocks
};

LinkedPartition makeLinkedPartition(int n,
                                    std::vector<std::vector<int>> blocks);
LinkedPartition parseLinkedPartition(int n, const std::string& text);

using ArcSet = std::set<std::pair<int, int>>;

// Block {i1 < ... < im} contributes (i1,i2), ..., (i1,im).
ArcSet standardRep(const LinkedPartition& p);
LinkedPartition fromArcs(int n, const ArcSet& arcs);

// Maximal crossing / nesting sizes, by brute force over arc subsets.
int cross(const LinkedPartition& p);
int nest(const LinkedPartition& p);
std::set<int> comp1(const LinkedPartition& p);
std::set<int> comp2(const LinkedPartition& p);

// Arc (i, j) becomes a one at row i (from the bottom), column n+1-j of the
// staircase with n-1 cells in the bottom row; crossings map to se-chains and
// nestings to ne-chains.
Filling toTriangleFilling(const LinkedPartition& p);
LinkedPartition fromTriangleFilling(const Filling& f);

// Reflect the staircase filling and push it back down with bottom-row moves.
LinkedPartition ourBijection(const LinkedPartition& p);

// Transpose the growth-diagram border and rebuild by the backward rules.
LinkedPartition cgpBijection(const LinkedPartition& p);

struct BorderStep {
  Partition shape;
  std::optional<int> markRow;
  bool operator==(const BorderStep&) const = default;
};

// Labels of the vertices and horizontal edges along the top-right border of
// the staircase growth diagram, read from bottom right to top left.
std::vector<BorderStep> vacillatingBorder(const LinkedPartition& p);

}  // namespace heckefill
