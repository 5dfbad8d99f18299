#include "weylcent/weyl.hpp"

namespace weylcent {

WeylFp reduce_mod_p(const WeylQ& a, Prime p) {
  WeylFp r(a.nvars(), FpRing(p));
  for (const auto& [k, c] : a.terms()) {
    if (mpz_divisible_ui_p(c.den().get_mpz_t(), p.value())) {
      throw BadPrimeError("coefficient " + c.to_string() +
                          " has denominator divisible by " +
                          std::to_string(p.value()));
    }
    r.add_term(k, rational_mod_p(c, p));
  }
  return r;
}

bool is_central(const WeylFp& a) {
  const auto p = a.ring().characteristic();
  for (const auto& [k, c] : a.terms()) {
    for (int e : k.xexp)
      if (e % static_cast<int>(p) != 0) return false;
    for (int e : k.dexp)
      if (e % static_cast<int>(p) != 0) return false;
  }
  return true;
}

WeylFp CenterDecomposition::reconstruct(int nvars) const {
  WeylFp sum(nvars, FpRing(p));
  for (const auto& [ij, z] : parts) {
    MonomialKey k = MonomialKey::one(nvars);
    k.xexp[0] = ij.first;
    k.dexp[0] = ij.second;
    sum = sum + z * WeylFp::monomial(k, FpRing(p).one(), FpRing(p));
  }
  return sum;
}

CenterDecomposition decompose_over_center(const WeylFp& a) {
  if (a.nvars() != 1)
    throw DimensionMismatchError("decomposition over the center needs nvars = 1");
  const Prime p = a.ring().prime();
  const int pi = static_cast<int>(p.value());

  CenterDecomposition dec{p, {}};
  for (const auto& [k, c] : a.terms()) {
    const int A = k.xexp[0], B = k.dexp[0];
    // x^A d^B = (x^(p*floor(A/p)) d^(p*floor(B/p))) * x^(A mod p) d^(B mod p);
    // the first factor is central because x^p and d^p are.
    MonomialKey central({{(A / pi) * pi}}, {{(B / pi) * pi}});
    auto key = std::make_pair(A % pi, B % pi);
    auto it = dec.parts.find(key);
    if (it == dec.parts.end()) {
      it = dec.parts.emplace(key, WeylFp(1, FpRing(p))).first;
    }
    it->second.add_term(central, c);
  }
  return dec;
}

}  // namespace weylcent
