#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weylcent/errors.hpp"
#include "weylcent/fp.hpp"
#include "weylcent/monomial.hpp"
#include "weylcent/rational.hpp"

namespace weylcent {

// Total degree of an element; nullopt is the -infinity of the zero element.
using Degree = std::optional<int>;

// Coefficient domains. A ring type provides the coefficient element type,
// its arithmetic, and the map from integers used by normal ordering.

struct RationalRing {
  using Elem = Rational;

  Elem zero() const { return Rational(0L); }
  Elem one() const { return Rational(1L); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  Elem from_bigint(const BigInt& n) const { return Rational(n); }
  int characteristic() const { return 0; }
  bool operator==(const RationalRing&) const { return true; }
};

class FpRing {
 public:
  using Elem = FpElem;

  explicit FpRing(Prime p) : p_(p) {}

  Prime prime() const { return p_; }
  Elem zero() const { return FpElem(0, p_); }
  Elem one() const { return FpElem(1, p_); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  Elem from_bigint(const BigInt& n) const { return FpElem::from_bigint(n, p_); }
  std::uint64_t characteristic() const { return p_.value(); }
  bool operator==(const FpRing& o) const { return p_ == o.p_; }

 private:
  Prime p_;
};

// Element of the Weyl algebra A_n over the given coefficient ring, stored in
// normal form as a sparse map monomial -> nonzero coefficient. Immutable in
// practice: all operations return new values.
template <class Ring>
class WeylElement {
 public:
  using Coeff = typename Ring::Elem;
  using TermMap = std::map<MonomialKey, Coeff, GradedLexLess>;

  WeylElement(int nvars, Ring ring) : nvars_(nvars), ring_(std::move(ring)) {
    if (nvars < 1) throw DimensionMismatchError("nvars must be >= 1");
  }

  static WeylElement monomial(const MonomialKey& key, const Coeff& c, Ring ring) {
    WeylElement e(key.nvars(), std::move(ring));
    e.add_term(key, c);
    return e;
  }

  int nvars() const { return nvars_; }
  const Ring& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Coeff coeff(const MonomialKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? ring_.zero() : it->second;
  }

  // Accumulates c on key, erasing the term if the sum is zero.
  void add_term(const MonomialKey& key, const Coeff& c) {
    if (key.nvars() != nvars_) throw DimensionMismatchError("monomial arity mismatch");
    if (ring_.is_zero(c)) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, c);
    } else {
      it->second = ring_.add(it->second, c);
      if (ring_.is_zero(it->second)) terms_.erase(it);
    }
  }

  // Graded-lex greatest monomial and its coefficient; element must be nonzero.
  const MonomialKey& lead_key() const {
    if (is_zero()) throw ZeroElementError("zero element has no leading monomial");
    return terms_.rbegin()->first;
  }
  const Coeff& lead_coeff() const {
    if (is_zero()) throw ZeroElementError("zero element has no leading coefficient");
    return terms_.rbegin()->second;
  }

  WeylElement operator+(const WeylElement& o) const {
    check_compatible(o);
    WeylElement r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, c);
    return r;
  }

  WeylElement operator-(const WeylElement& o) const {
    check_compatible(o);
    WeylElement r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, ring_.neg(c));
    return r;
  }

  WeylElement operator-() const {
    WeylElement r(nvars_, ring_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, ring_.neg(c));
    return r;
  }

  WeylElement scaled(const Coeff& s) const {
    WeylElement r(nvars_, ring_);
    for (const auto& [k, c] : terms_) r.add_term(k, ring_.mul(c, s));
    return r;
  }

  WeylElement operator*(const WeylElement& o) const;

  bool operator==(const WeylElement& o) const {
    return nvars_ == o.nvars_ && ring_ == o.ring_ && terms_ == o.terms_;
  }
  bool operator!=(const WeylElement& o) const { return !(*this == o); }

 private:
  void check_compatible(const WeylElement& o) const {
    if (nvars_ != o.nvars_) throw DimensionMismatchError("operand nvars differ");
    if (!(ring_ == o.ring_)) throw DomainMismatchError("coefficient domains differ");
  }

  int nvars_;
  Ring ring_;
  TermMap terms_;
};

using WeylQ = WeylElement<RationalRing>;
using WeylFp = WeylElement<FpRing>;

namespace detail {

// k! * C(a,k) * C(b,k): the integer in the normal-ordering identity
//   d^a x^b = sum_k  k! C(a,k) C(b,k)  x^(b-k) d^(a-k).
inline BigInt contraction_factor(unsigned k, unsigned a, unsigned b) {
  BigInt f, ca, cb;
  mpz_fac_ui(f.get_mpz_t(), k);
  mpz_bin_uiui(ca.get_mpz_t(), a, k);
  mpz_bin_uiui(cb.get_mpz_t(), b, k);
  return f * ca * cb;
}

}  // namespace detail

// Normal form of (x^i1 d^j1) * (x^i2 d^j2). Coordinates are independent, so
// the one-variable identity applies coordinatewise.
template <class Ring>
WeylElement<Ring> monomial_mul(const MonomialKey& m1, const MonomialKey& m2,
                               Ring ring) {
  if (m1.nvars() != m2.nvars())
    throw DimensionMismatchError("monomial arities differ");
  const int n = m1.nvars();
  WeylElement<Ring> out(n, ring);

  std::vector<int> kmax(n);
  for (int i = 0; i < n; ++i) kmax[i] = std::min(m1.dexp[i], m2.xexp[i]);

  std::vector<int> k(n, 0);
  while (true) {
    BigInt factor = 1;
    for (int i = 0; i < n; ++i)
      factor *= detail::contraction_factor(k[i], m1.dexp[i], m2.xexp[i]);
    MonomialKey key = m1;
    for (int i = 0; i < n; ++i) {
      key.xexp[i] = m1.xexp[i] + m2.xexp[i] - k[i];
      key.dexp[i] = m1.dexp[i] + m2.dexp[i] - k[i];
    }
    out.add_term(key, ring.from_bigint(factor));

    int i = n - 1;
    while (i >= 0 && k[i] == kmax[i]) k[i--] = 0;
    if (i < 0) break;
    ++k[i];
  }
  return out;
}

template <class Ring>
WeylElement<Ring> WeylElement<Ring>::operator*(const WeylElement& o) const {
  check_compatible(o);
  WeylElement r(nvars_, ring_);
  for (const auto& [k1, c1] : terms_) {
    for (const auto& [k2, c2] : o.terms_) {
      Coeff c = ring_.mul(c1, c2);
      WeylElement prod = monomial_mul(k1, k2, ring_);
      for (const auto& [k, f] : prod.terms()) r.add_term(k, ring_.mul(c, f));
    }
  }
  return r;
}

template <class Ring>
WeylElement<Ring> commutator(const WeylElement<Ring>& a, const WeylElement<Ring>& b) {
  return a * b - b * a;
}

// Max total degree over stored monomials; nullopt for the zero element.
template <class Ring>
Degree total_degree(const WeylElement<Ring>& a) {
  if (a.is_zero()) return std::nullopt;
  int best = 0;
  for (const auto& [k, c] : a.terms()) best = std::max(best, k.total_degree());
  return best;
}

// Sub-element of monomials of exactly the top total degree.
template <class Ring>
WeylElement<Ring> leading_form(const WeylElement<Ring>& a) {
  if (a.is_zero()) throw ZeroElementError("leading form of zero element");
  int top = *total_degree(a);
  WeylElement<Ring> r(a.nvars(), a.ring());
  for (const auto& [k, c] : a.terms())
    if (k.total_degree() == top) r.add_term(k, c);
  return r;
}

// Convenience builders.

template <class Ring>
WeylElement<Ring> weyl_one(int nvars, Ring ring) {
  auto one = ring.one();
  return WeylElement<Ring>::monomial(MonomialKey::one(nvars), one, std::move(ring));
}

// x_i (1-based index).
template <class Ring>
WeylElement<Ring> x_gen(int i, int nvars, Ring ring) {
  MonomialKey k = MonomialKey::one(nvars);
  k.xexp.at(i - 1) = 1;
  auto one = ring.one();
  return WeylElement<Ring>::monomial(k, one, std::move(ring));
}

// d_i (1-based index).
template <class Ring>
WeylElement<Ring> d_gen(int i, int nvars, Ring ring) {
  MonomialKey k = MonomialKey::one(nvars);
  k.dexp.at(i - 1) = 1;
  auto one = ring.one();
  return WeylElement<Ring>::monomial(k, one, std::move(ring));
}

template <class Ring>
WeylElement<Ring> weyl_pow(const WeylElement<Ring>& base, unsigned e) {
  WeylElement<Ring> r = weyl_one(base.nvars(), base.ring());
  for (unsigned i = 0; i < e; ++i) r = r * base;
  return r;
}

// Coefficientwise reduction of a rational element modulo p. Throws
// BadPrimeError naming the offending coefficient when p divides a denominator.
WeylFp reduce_mod_p(const WeylQ& a, Prime p);

// Central <=> every stored exponent is divisible by p. Equivalent to
// commuting with all 2n generators; the test suite checks the equivalence.
bool is_central(const WeylFp& a);

// Expression of an element of A_1(F_p) as sum z_ij x^i d^j with z_ij central
// and 0 <= i, j < p. Only nonzero parts are stored.
struct CenterDecomposition {
  Prime p;
  std::map<std::pair<int, int>, WeylFp> parts;

  WeylFp reconstruct(int nvars) const;
};

CenterDecomposition decompose_over_center(const WeylFp& a);

}  // namespace weylcent
