#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weylcent/weyl.hpp"

namespace weylcent {

// lambda * P with integer coefficients; lambda is the lcm of the
// coefficient denominators (1 for the zero element).
struct Cleared {
  WeylQ element;
  BigInt factor;
};

Cleared clear_denominators(const WeylQ& p);

struct ClearedPair {
  WeylQ pint;
  WeylQ qint;
  BigInt lambda;
  BigInt mu;
};

ClearedPair clear_pair(const WeylQ& p, const WeylQ& q);

// The unit u = n! * prod(top-degree coefficients of the cleared a): a prime
// is usable iff it divides neither u nor any denominator-clearing factor.
struct GoodPrimeFilter {
  int n = 0;
  BigInt factorial_n;
  BigInt u;
  std::vector<BigInt> extra;  // denominator-clearing factors of a, P, Q

  // When bad, fills *reason with the cause.
  bool is_good(std::uint64_t p, std::string* reason = nullptr) const;
};

// Throws ConstantOperatorError when total_degree(a) < 1.
GoodPrimeFilter compute_u(const WeylQ& a);

// B with |c| <= B for every normal-form coefficient c of [pint, qint].
// All normal-ordering contributions are nonnegative, so coefficientwise
// absolute values majorize both products.
BigInt majorant_bound(const WeylQ& pint, const WeylQ& qint);

enum class Verdict { Commute, NotCommute, Inconclusive };

const char* to_string(Verdict v);

// Per-prime record of the theorem pipeline's hypotheses and conclusion.
struct PipelineTrace {
  int tot_a = 0;
  bool a_central = false;
  bool a_p_commutes = false;
  bool a_q_commutes = false;
  bool p_q_commutes = false;
};

struct PrimeOutcome {
  enum class Status { Pass, Fail, Skipped };

  std::uint64_t p = 0;
  Status status = Status::Pass;
  std::string skip_reason;  // nonempty iff Skipped
  std::optional<PipelineTrace> trace;
};

struct CertificateReport {
  Verdict verdict = Verdict::Inconclusive;
  std::string reason;  // set when the verdict is Inconclusive
  BigInt majorant;     // B
  BigInt prime_product;  // product of passing primes
  std::vector<PrimeOutcome> primes;
  std::optional<WeylQ> cross_commutator;  // direct [P,Q] over Q, if computed

  bool cross_checked() const { return cross_commutator.has_value(); }
  bool cross_zero() const { return cross_commutator && cross_commutator->is_zero(); }
};

struct CertifyOptions {
  bool cross_check = true;
  int max_primes = 64;
};

// Decides [P,Q] = 0 by reduction modulo primes. COMMUTE requires the product
// of passing primes to exceed 2B (each cleared commutator coefficient is
// divisible by every passing prime and bounded by B in absolute value, hence
// zero); NOT_COMMUTE on the first failing prime.
CertificateReport certify_zero_commutator(const WeylQ& p, const WeylQ& q,
                                          const CertifyOptions& opts = {});

// Full pipeline with hypotheses on a: verifies over Q that a is nonconstant
// and that [a,P] = [a,Q] = 0 (INCONCLUSIVE otherwise), restricts to primes
// that are good for a, and records the per-prime trace.
CertificateReport theorem_pipeline(const WeylQ& a, const WeylQ& p, const WeylQ& q,
                                   const CertifyOptions& opts = {});

}  // namespace weylcent
