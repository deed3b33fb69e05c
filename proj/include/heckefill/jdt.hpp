#pragma once

#include <set>

#include "heckefill/core.hpp"

namespace heckefill {

using CornerSet = std::set<Cell>;

// Inner corners of a partition: maximally southeast boxes.
CornerSet innerCorners(const Partition& p);
// Boxes outside p that can be added while keeping a partition shape.
CornerSet addableCorners(const Partition& p);

// Jeu de taquin for increasing tableaux. Holes start at the given inner
// corners of t's inner shape and migrate southeast; at stage v every hole
// adjacent to a v (below or right) and every such v flip simultaneously.
SkewIncreasingTableau jdt(const SkewIncreasingTableau& t, const CornerSet& c);

// Reverse slides: holes start at addable corners of t's outer shape and
// migrate northwest, processing values from the maximum down.
SkewIncreasingTableau revJdt(const SkewIncreasingTableau& t,
                             const CornerSet& c);

// Corner rotation used by the rectangle map: drop the 1 at the top-left box,
// slide, shift every entry down by one, and write the former maximum into
// the vacated corners. Shape is preserved.
IncreasingTableau primeTransform(const IncreasingTableau& p);
IncreasingTableau inversePrimeTransform(const IncreasingTableau& p);

}  // namespace heckefill
