#pragma once

#include <set>
#include <utility>
#include <vector>

#include "heckefill/polyomino.hpp"

namespace heckefill {

// Filling of a height x width rectangle, row 1 at the bottom.
struct RectangleFilling {
  int height = 0;
  int width = 0;
  std::set<PolyCell> ones;
  bool operator==(const RectangleFilling&) const = default;
};

// The rectangle map: empty rows slide down by one position (cyclically when
// the bottom row is empty), empty columns stay, and the word of the nonempty
// part is rewritten through the insertion-tableau corner rotation.
RectangleFilling phi(const RectangleFilling& t);
RectangleFilling phiInverse(const RectangleFilling& t);

// Geometry of one "move the bottom row up" step.
struct MoveCertificate {
  Polyomino source;
  Polyomino target;
  int movedRowFrom = 0;
  int movedRowTo = 0;
  RectSpan rect;       // R, the largest rectangle of source containing the row
  RectSpan rectPrime;  // R', the same-size maximal rectangle of target
};

// Where the bottom row of a stack polyomino lands when moved up as much as
// possible; errors when the shape is already Ferrers ("nothing to move").
MoveCertificate moveBottomRowTarget(const Polyomino& m);

// The filling bijection for one bottom-row move.
Filling applyF(const Filling& m);

// Repeated bottom-row moves down to the Ferrers shape of the row multiset.
std::pair<Filling, std::vector<MoveCertificate>> toFerrers(const Filling& m);

namespace detail {
// Row-move engine shared with the counterexample replays: moves row k of a
// row-comparable shape up as much as possible and maps the filling through
// phi inside the maximal rectangle of that row.
MoveCertificate moveRowUpTarget(const Polyomino& m, int row);
Filling applyRowMove(const Filling& m, int row);
}  // namespace detail

}  // namespace heckefill
