#pragma once

#include <compare>
#include <cstddef>
#include <numeric>
#include <vector>

namespace weylcent {

// Exponents of the normal-ordered monomial x1^i1..xn^in d1^j1..dn^jn.
struct MonomialKey {
  std::vector<int> xexp;
  std::vector<int> dexp;

  MonomialKey() = default;
  MonomialKey(std::vector<int> x, std::vector<int> d)
      : xexp(std::move(x)), dexp(std::move(d)) {}

  static MonomialKey one(int nvars) {
    return MonomialKey(std::vector<int>(nvars, 0), std::vector<int>(nvars, 0));
  }

  int nvars() const { return static_cast<int>(xexp.size()); }

  int total_degree() const {
    return std::accumulate(xexp.begin(), xexp.end(), 0) +
           std::accumulate(dexp.begin(), dexp.end(), 0);
  }

  bool is_one() const { return total_degree() == 0; }

  bool operator==(const MonomialKey&) const = default;
};

// Graded lexicographic order: total degree first, then xexp lexicographic,
// then dexp lexicographic. This is the canonical order used for printing and
// for all linear algebra.
struct GradedLexLess {
  bool operator()(const MonomialKey& a, const MonomialKey& b) const {
    int ta = a.total_degree(), tb = b.total_degree();
    if (ta != tb) return ta < tb;
    if (a.xexp != b.xexp) return a.xexp < b.xexp;
    return a.dexp < b.dexp;
  }
};

inline bool graded_lex_less(const MonomialKey& a, const MonomialKey& b) {
  return GradedLexLess{}(a, b);
}

// All monomials with total degree <= bound, ascending in graded-lex order.
std::vector<MonomialKey> monomials_up_to(int nvars, int bound);

}  // namespace weylcent
