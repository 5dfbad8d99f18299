#pragma once

#include <cstdint>
#include <string>

#include "weylcent/errors.hpp"
#include "weylcent/rational.hpp"

namespace weylcent {

// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime_u64(std::uint64_t n);

// A verified prime modulus.
class Prime {
 public:
  explicit Prime(std::uint64_t p) : p_(p) {
    if (!is_prime_u64(p)) throw NotPrimeError(std::to_string(p) + " is not prime");
  }
  std::uint64_t value() const { return p_; }
  bool operator==(const Prime& o) const { return p_ == o.p_; }
  bool operator!=(const Prime& o) const { return p_ != o.p_; }

 private:
  std::uint64_t p_;
};

// Element of F_p, value in [0, p). Operations on mismatched moduli throw
// DomainMismatchError.
class FpElem {
 public:
  FpElem(std::uint64_t value, Prime p) : v_(value % p.value()), p_(p.value()) {}

  static FpElem from_bigint(const BigInt& n, Prime p);

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  FpElem operator+(const FpElem& o) const;
  FpElem operator-(const FpElem& o) const;
  FpElem operator*(const FpElem& o) const;
  FpElem operator-() const;
  FpElem inv() const;  // throws ZeroInverseError on 0
  FpElem operator/(const FpElem& o) const { return *this * o.inv(); }

  bool operator==(const FpElem& o) const { return v_ == o.v_ && p_ == o.p_; }
  bool operator!=(const FpElem& o) const { return !(*this == o); }

  std::string to_string() const { return std::to_string(v_); }

 private:
  void check(const FpElem& o) const {
    if (p_ != o.p_) throw DomainMismatchError("F_p moduli differ");
  }
  std::uint64_t v_;
  std::uint64_t p_;
};

// a^-1 in F_p; throws ZeroInverseError if a = 0.
inline FpElem fp_inv(const FpElem& a) { return a.inv(); }

// Image of r in F_p. Throws BadPrimeError when p divides den(r).
FpElem rational_mod_p(const Rational& r, Prime p);

// Emits primes >= start in increasing order, deterministically.
class PrimeStream {
 public:
  explicit PrimeStream(std::uint64_t start = 2) : next_(start < 2 ? 2 : start) {}
  Prime next();

 private:
  std::uint64_t next_;
};

}  // namespace weylcent
