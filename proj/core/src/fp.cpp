#include "weylcent/fp.hpp"

namespace weylcent {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is known to decide primality for every n < 2^64.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FpElem FpElem::from_bigint(const BigInt& n, Prime p) {
  return FpElem(mpz_fdiv_ui(n.get_mpz_t(), p.value()), p);
}

FpElem FpElem::operator+(const FpElem& o) const {
  check(o);
  u64 s = v_ + o.v_;
  if (s >= p_) s -= p_;
  return FpElem(s, Prime(p_));
}

FpElem FpElem::operator-(const FpElem& o) const {
  check(o);
  u64 s = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
  return FpElem(s, Prime(p_));
}

FpElem FpElem::operator*(const FpElem& o) const {
  check(o);
  return FpElem(mulmod(v_, o.v_, p_), Prime(p_));
}

FpElem FpElem::operator-() const {
  return FpElem(v_ == 0 ? 0 : p_ - v_, Prime(p_));
}

FpElem FpElem::inv() const {
  if (v_ == 0) throw ZeroInverseError();
  return FpElem(powmod(v_, p_ - 2, p_), Prime(p_));
}

FpElem rational_mod_p(const Rational& r, Prime p) {
  if (mpz_divisible_ui_p(r.den().get_mpz_t(), p.value())) {
    throw BadPrimeError("denominator of " + r.to_string() + " divisible by " +
                        std::to_string(p.value()));
  }
  FpElem num = FpElem::from_bigint(r.num(), p);
  FpElem den = FpElem::from_bigint(r.den(), p);
  return num * den.inv();
}

Prime PrimeStream::next() {
  u64 c = next_;
  while (!is_prime_u64(c)) ++c;
  next_ = c + 1;
  return Prime(c);
}

}  // namespace weylcent
