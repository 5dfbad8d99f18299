#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "weylcent/linalg.hpp"
#include "weylcent/weyl.hpp"

namespace weylcent {

struct CommuteCheck {
  bool commutative = true;
  // First pair (in list order) with nonzero commutator.
  std::optional<std::pair<WeylFp, WeylFp>> witness;
};

// Checks [b_i, b_j] = 0 for all i < j.
CommuteCheck pairwise_commute(const std::vector<WeylFp>& basis);

// The degree-<= D slice of the centralizer of a, as a canonical basis.
struct CentralizerBasis {
  WeylFp a;
  Prime p;
  int degree_bound;
  // Reduced echelon basis, ascending by leading monomial. Spans exactly
  // {b : total_degree(b) <= degree_bound, [a,b] = 0}.
  std::vector<WeylFp> basis;
  bool commutative;
  std::optional<std::pair<WeylFp, WeylFp>> witness;
};

// Kernel of b -> [a,b] on the monomial span of total degree <= degree_bound.
CentralizerBasis centralizer_basis(const WeylFp& a, int degree_bound);

// Echelon basis of the degree-<= D slice of Z[a]: the span of all normal
// forms (x^p)^r (d^p)^s a^m of total degree <= D. Requires nvars = 1.
std::vector<WeylFp> za_span(const WeylFp& a, int degree_bound);

// b = z1 / z2 with z1, z2 in the degree-<= D slice of Z[a] and z2 != 0:
// a witness that b lies in the fraction field of Z[a].
struct FractionWitness {
  WeylFp b;
  WeylFp z1;
  WeylFp z2;
  int degree_bound;
};

// Solves b*z2 - z1 = 0 exactly over the za_span slice. Returns nullopt when
// no witness exists within the bound (inconclusive, not a refutation).
// Throws NotCommutingInputError when [a,b] != 0, CentralInputError when a is
// central, ZeroElementError when a = 0.
std::optional<FractionWitness> fraction_witness(const WeylFp& a, const WeylFp& b,
                                                int degree_bound);

}  // namespace weylcent
