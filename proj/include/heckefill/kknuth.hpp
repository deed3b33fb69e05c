#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "heckefill/core.hpp"

namespace heckefill {

// Search bound for the equivalence closure; x == xx grows words, so the
// closure is only explored up to max_len letters and max_states words.
struct EquivBudget {
  std::size_t maxLen = 0;
  std::size_t maxStates = 200000;
};

// All words one relation application away (either direction); expansions
// are emitted only while the result stays within budget.maxLen.
std::set<Word> kknuthNeighbors(const Word& w, const EquivBudget& budget);

enum class EquivVerdict { kEquivalent, kNotFoundWithinBudget };

struct EquivResult {
  EquivVerdict verdict = EquivVerdict::kNotFoundWithinBudget;
  // Derivation from w1 to w2 (inclusive endpoints) when equivalent.
  std::vector<Word> witness;
  std::size_t statesExplored = 0;
};

// Breadth-first closure from w1; never claims inequivalence.
EquivResult kknuthEquivalent(const Word& w1, const Word& w2,
                             const EquivBudget& budget);

// Subsequence of letters within [a, b].
Word restrictWord(const Word& w, int a, int b);

// Longest strictly increasing / decreasing subsequence, by direct DP.
int lis(const Word& w);
int lds(const Word& w);

}  // namespace heckefill
