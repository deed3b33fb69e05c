#pragma once

#include <utility>

#include "heckefill/core.hpp"

namespace heckefill {

// Output of one Hecke row insertion: the new tableau, the special corner,
// and alpha = 1 exactly when the corner lies outside the input shape.
struct InsertionResult {
  IncreasingTableau tableau;
  Cell corner;
  int alpha = 0;
  bool operator==(const InsertionResult&) const = default;
};

// Insertion and recording tableau of a word.
struct HeckePair {
  IncreasingTableau p;
  SetValuedTableau q;
  bool operator==(const HeckePair&) const = default;
};

InsertionResult heckeInsert(const IncreasingTableau& y, int x);

// Inverts heckeInsert. Throws "not a corner" / "inconsistent triple".
std::pair<IncreasingTableau, int> reverseHeckeInsert(const IncreasingTableau& z,
                                                     Cell corner, int alpha);

HeckePair insertWord(const Word& w);

// Inverts insertWord; throws "unrecoverable pair" when the pair is not in
// the image of insertWord.
Word recoverWord(const HeckePair& pair);

// (columns of P(w), rows of P(w)) = (lis(w), lds(w)).
std::pair<int, int> lisLdsViaTableau(const Word& w);

}  // namespace heckefill
