#include "weylcent/monomial.hpp"

#include <algorithm>

namespace weylcent {

namespace {

// Enumerates nonnegative integer vectors of the given length with entry sum
// <= bound, appending each to out via the odometer pattern.
void enumerate_exponents(int length, int bound,
                         std::vector<std::vector<int>>& out) {
  std::vector<int> cur(length, 0);
  while (true) {
    out.push_back(cur);
    int i = length - 1;
    while (i >= 0) {
      ++cur[i];
      if (std::accumulate(cur.begin(), cur.end(), 0) <= bound) break;
      cur[i] = 0;
      --i;
    }
    if (i < 0) return;
  }
}

}  // namespace

std::vector<MonomialKey> monomials_up_to(int nvars, int bound) {
  std::vector<MonomialKey> keys;
  if (bound < 0) return keys;
  std::vector<std::vector<int>> tuples;
  enumerate_exponents(2 * nvars, bound, tuples);
  keys.reserve(tuples.size());
  for (auto& t : tuples) {
    keys.emplace_back(std::vector<int>(t.begin(), t.begin() + nvars),
                      std::vector<int>(t.begin() + nvars, t.end()));
  }
  std::sort(keys.begin(), keys.end(), GradedLexLess{});
  return keys;
}

}  // namespace weylcent
