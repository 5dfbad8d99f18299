#include "weylcent/centralizer.hpp"

#include <algorithm>
#include <map>

namespace weylcent {

CommuteCheck pairwise_commute(const std::vector<WeylFp>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!commutator(basis[i], basis[j]).is_zero()) {
        return {false, std::make_pair(basis[i], basis[j])};
      }
    }
  }
  return {true, std::nullopt};
}

CentralizerBasis centralizer_basis(const WeylFp& a, int degree_bound) {
  if (a.is_zero()) throw ZeroElementError("centralizer of the zero element");
  if (degree_bound < 0) throw Error("degree bound must be >= 0");

  const Prime p = a.ring().prime();
  const int n = a.nvars();
  const FpRing ring(p);

  const std::vector<MonomialKey> source = monomials_up_to(n, degree_bound);
  const std::vector<MonomialKey> target =
      monomials_up_to(n, degree_bound + *total_degree(a));
  std::map<MonomialKey, std::size_t, GradedLexLess> target_index;
  for (std::size_t i = 0; i < target.size(); ++i) target_index.emplace(target[i], i);

  // Columns are source monomials, rows target monomials, both graded-lex
  // ascending; column j holds the coordinates of [a, source_j].
  FpMatrix mat(target.size(), source.size(), p);
  for (std::size_t j = 0; j < source.size(); ++j) {
    WeylFp bracket = commutator(a, WeylFp::monomial(source[j], ring.one(), ring));
    for (const auto& [key, c] : bracket.terms()) {
      mat.set(target_index.at(key), j, c.value());
    }
  }

  FpEchelon echelon(n, p);
  for (const auto& vec : mat.kernel()) {
    WeylFp e(n, ring);
    for (std::size_t j = 0; j < source.size(); ++j) {
      if (vec[j] != 0) e.add_term(source[j], FpElem(vec[j], p));
    }
    echelon.insert(std::move(e));
  }

  CentralizerBasis out{a, p, degree_bound, echelon.basis_ascending(), true, std::nullopt};
  CommuteCheck check = pairwise_commute(out.basis);
  out.commutative = check.commutative;
  out.witness = std::move(check.witness);
  return out;
}

std::vector<WeylFp> za_span(const WeylFp& a, int degree_bound) {
  if (a.is_zero()) throw ZeroElementError("Z[a] span of the zero element");
  if (a.nvars() != 1) throw DimensionMismatchError("Z[a] span needs nvars = 1");

  const Prime p = a.ring().prime();
  const int pi = static_cast<int>(p.value());
  const FpRing ring(p);
  const int tot = *total_degree(a);

  FpEchelon echelon(1, p);
  // Powers of a up to the degree budget; constants contribute only a^0.
  std::vector<WeylFp> apow{weyl_one(1, ring)};
  if (tot > 0) {
    for (int m = 1; m * tot <= degree_bound; ++m) apow.push_back(apow.back() * a);
  }

  for (int r = 0; pi * r <= degree_bound; ++r) {
    for (int s = 0; pi * (r + s) <= degree_bound; ++s) {
      const int remaining = degree_bound - pi * (r + s);
      for (std::size_t m = 0; m < apow.size(); ++m) {
        if (tot > 0 && static_cast<int>(m) * tot > remaining) break;
        MonomialKey center({{pi * r}}, {{pi * s}});
        echelon.insert(WeylFp::monomial(center, ring.one(), ring) * apow[m]);
      }
    }
  }
  return echelon.basis_ascending();
}

std::optional<FractionWitness> fraction_witness(const WeylFp& a, const WeylFp& b,
                                                int degree_bound) {
  if (a.is_zero()) throw ZeroElementError("fraction witness for the zero element");
  if (a.nvars() != 1 || b.nvars() != 1)
    throw DimensionMismatchError("fraction witness needs nvars = 1");
  if (!commutator(a, b).is_zero())
    throw NotCommutingInputError("b does not commute with a");
  if (is_central(a)) throw CentralInputError("a is central; Z[a] = Z");

  const Prime p = a.ring().prime();
  const std::vector<WeylFp> span = za_span(a, degree_bound);

  FpEchelon span_echelon(1, p);
  for (const WeylFp& s : span) span_echelon.insert(s);

  // z2 = sum beta_t s_t must satisfy b*z2 in span(S); reduce each b*s_t
  // against S and find the kernel of the residue matrix.
  std::vector<WeylFp> residues;
  residues.reserve(span.size());
  std::map<MonomialKey, std::size_t, GradedLexLess> row_index;
  for (const WeylFp& s : span) {
    WeylFp res = span_echelon.reduce(b * s);
    for (const auto& [key, c] : res.terms()) {
      row_index.emplace(key, 0);
    }
    residues.push_back(std::move(res));
  }
  std::size_t nrows = 0;
  for (auto& [key, idx] : row_index) idx = nrows++;

  FpMatrix mat(nrows == 0 ? 1 : nrows, span.size(), p);
  for (std::size_t t = 0; t < residues.size(); ++t) {
    for (const auto& [key, c] : residues[t].terms()) {
      mat.set(row_index.at(key), t, c.value());
    }
  }

  const auto kernel = mat.kernel();
  if (kernel.empty()) return std::nullopt;

  // Deterministic tie-break: the candidate whose z2 has the graded-lex
  // smallest leading monomial.
  std::optional<WeylFp> best;
  for (const auto& beta : kernel) {
    WeylFp z2(1, FpRing(p));
    for (std::size_t t = 0; t < span.size(); ++t) {
      if (beta[t] != 0) z2 = z2 + span[t].scaled(FpElem(beta[t], p));
    }
    if (z2.is_zero()) continue;
    if (!best || graded_lex_less(z2.lead_key(), best->lead_key())) best = z2;
  }
  if (!best) return std::nullopt;

  WeylFp z2 = best->scaled(best->lead_coeff().inv());
  WeylFp z1 = b * z2;
  return FractionWitness{b, std::move(z1), std::move(z2), degree_bound};
}

}  // namespace weylcent
