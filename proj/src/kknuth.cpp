#include "heckefill/kknuth.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace heckefill {

std::set<Word> kknuthNeighbors(const Word& w, const EquivBudget& budget) {
  std::set<Word> out;
  const size_t n = w.size();

  // xzy == zxy and yxz == yzx: adjacent swaps guarded by the third letter.
  for (size_t i = 0; i + 2 < n; ++i) {
    int a = w[i], b = w[i + 1], c = w[i + 2];
    // swap the first two iff the trailing letter lies strictly between them
    if (std::min(a, b) < c && c < std::max(a, b)) {
      Word v = w;
      std::swap(v[i], v[i + 1]);
      out.insert(std::move(v));
    }
    // swap the last two iff the leading letter lies strictly between them
    if (std::min(b, c) < a && a < std::max(b, c)) {
      Word v = w;
      std::swap(v[i + 1], v[i + 2]);
      out.insert(std::move(v));
    }
  }
  // xyx == yxy
  for (size_t i = 0; i + 2 < n; ++i)
    if (w[i] == w[i + 2] && w[i] != w[i + 1]) {
      Word v = w;
      v[i] = w[i + 1];
      v[i + 1] = w[i];
      v[i + 2] = w[i + 1];
      out.insert(std::move(v));
    }
  // xx -> x
  for (size_t i = 0; i + 1 < n; ++i)
    if (w[i] == w[i + 1]) {
      Word v;
      v.reserve(n - 1);
      v.insert(v.end(), w.begin(), w.begin() + static_cast<long>(i));
      v.insert(v.end(), w.begin() + static_cast<long>(i) + 1, w.end());
      out.insert(std::move(v));
    }
  // x -> xx
  if (n + 1 <= budget.maxLen)
    for (size_t i = 0; i < n; ++i) {
      Word v;
      v.reserve(n + 1);
      v.insert(v.end(), w.begin(), w.begin() + static_cast<long>(i) + 1);
      v.push_back(w[i]);
      v.insert(v.end(), w.begin() + static_cast<long>(i) + 1, w.end());
      out.insert(std::move(v));
    }
  out.erase(w);
  return out;
}

EquivResult kknuthEquivalent(const Word& w1, const Word& w2,
                             const EquivBudget& budget) {
  if (budget.maxLen < std::max(w1.size(), w2.size()))
    throw std::invalid_argument(
        "kknuthEquivalent: budget.maxLen below input word length");
  EquivResult res;
  if (w1 == w2) {
    res.verdict = EquivVerdict::kEquivalent;
    res.witness = {w1};
    res.statesExplored = 1;
    return res;
  }
  // Frontier kept sorted (shorter first, then lexicographic) so exploration
  // order and logs are reproducible.
  auto cmp = [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  };
  std::map<Word, Word, decltype(cmp)> parent(cmp);  // word -> predecessor
  std::set<Word, decltype(cmp)> frontier(cmp);
  parent[w1] = w1;
  frontier.insert(w1);
  while (!frontier.empty() && parent.size() < budget.maxStates) {
    Word cur = *frontier.begin();
    frontier.erase(frontier.begin());
    for (const Word& next : kknuthNeighbors(cur, budget)) {
      if (parent.count(next)) continue;
      parent[next] = cur;
      if (next == w2) {
        res.verdict = EquivVerdict::kEquivalent;
        std::vector<Word> path{next};
        Word at = next;
        while (parent[at] != at) {
          at = parent[at];
          path.push_back(at);
        }
        std::reverse(path.begin(), path.end());
        res.witness = std::move(path);
        res.statesExplored = parent.size();
        return res;
      }
      frontier.insert(next);
    }
  }
  res.statesExplored = parent.size();
  return res;
}

Word restrictWord(const Word& w, int a, int b) {
  if (a > b) throw std::invalid_argument("restrictWord: a > b");
  Word out;
  for (int x : w)
    if (a <= x && x <= b) out.push_back(x);
  return out;
}

int lis(const Word& w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> best(n, 1);
  int ans = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j)
      if (w[j] < w[i]) best[i] = std::max(best[i], best[j] + 1);
    ans = std::max(ans, best[i]);
  }
  return ans;
}

int lds(const Word& w) {
  Word neg(w.size());
  for (size_t i = 0; i < w.size(); ++i) neg[i] = -w[i];
  return lis(neg);
}

}  // namespace heckefill
