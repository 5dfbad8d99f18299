#include "weylcent/certifier.hpp"

#include <algorithm>

namespace weylcent {

Cleared clear_denominators(const WeylQ& p) {
  BigInt l = 1;
  for (const auto& [k, c] : p.terms()) {
    BigInt den = c.den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  WeylQ scaled(p.nvars(), p.ring());
  for (const auto& [k, c] : p.terms()) scaled.add_term(k, Rational(l) * c);
  return {std::move(scaled), std::move(l)};
}

ClearedPair clear_pair(const WeylQ& p, const WeylQ& q) {
  Cleared cp = clear_denominators(p);
  Cleared cq = clear_denominators(q);
  return {std::move(cp.element), std::move(cq.element), std::move(cp.factor),
          std::move(cq.factor)};
}

bool GoodPrimeFilter::is_good(std::uint64_t p, std::string* reason) const {
  if (mpz_divisible_ui_p(u.get_mpz_t(), p)) {
    if (reason) *reason = "divides u";
    return false;
  }
  for (const BigInt& f : extra) {
    if (mpz_divisible_ui_p(f.get_mpz_t(), p)) {
      if (reason) *reason = "divides a denominator";
      return false;
    }
  }
  return true;
}

GoodPrimeFilter compute_u(const WeylQ& a) {
  Degree deg = total_degree(a);
  if (!deg || *deg < 1)
    throw ConstantOperatorError("a must be nonconstant (total degree >= 1)");

  Cleared cleared = clear_denominators(a);
  GoodPrimeFilter filter;
  filter.n = *deg;
  mpz_fac_ui(filter.factorial_n.get_mpz_t(), static_cast<unsigned long>(filter.n));
  filter.u = filter.factorial_n;
  const WeylQ top = leading_form(cleared.element);
  for (const auto& [k, c] : top.terms()) {
    filter.u *= c.num();  // integer coefficients: den = 1
  }
  filter.extra.push_back(cleared.factor);
  return filter;
}

namespace {

WeylQ abs_coeffs(const WeylQ& p) {
  WeylQ r(p.nvars(), p.ring());
  for (const auto& [k, c] : p.terms()) r.add_term(k, c.abs());
  return r;
}

}  // namespace

BigInt majorant_bound(const WeylQ& pint, const WeylQ& qint) {
  WeylQ ap = abs_coeffs(pint);
  WeylQ aq = abs_coeffs(qint);
  WeylQ sum = ap * aq + aq * ap;
  BigInt best = 0;
  for (const auto& [k, c] : sum.terms()) best = std::max(best, c.num());
  return best;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Commute: return "COMMUTE";
    case Verdict::NotCommute: return "NOT_COMMUTE";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

namespace {

// Shared prime-streaming loop. `good` classifies a prime (filling a skip
// reason), `check` runs the per-prime work and returns pass/fail plus an
// optional trace. COMMUTE once the product of passing primes exceeds 2B.
template <class GoodFn, class CheckFn>
void run_prime_certificate(CertificateReport& report, const CertifyOptions& opts,
                           GoodFn good, CheckFn check) {
  const BigInt threshold = 2 * report.majorant;
  report.prime_product = 1;

  if (report.prime_product > threshold) {
    // B = 0: the commutator has no nonzero coefficient at all.
    report.verdict = Verdict::Commute;
    return;
  }

  PrimeStream stream;
  int used = 0;
  while (used < opts.max_primes) {
    const Prime prime = stream.next();
    const std::uint64_t p = prime.value();

    std::string reason;
    if (!good(p, &reason)) {
      report.primes.push_back(
          {p, PrimeOutcome::Status::Skipped, std::move(reason), std::nullopt});
      continue;
    }
    ++used;

    PrimeOutcome outcome;
    outcome.p = p;
    const bool pass = check(prime, outcome);
    outcome.status = pass ? PrimeOutcome::Status::Pass : PrimeOutcome::Status::Fail;
    report.primes.push_back(std::move(outcome));

    if (!pass) {
      report.verdict = Verdict::NotCommute;
      return;
    }
    report.prime_product *= p;
    if (report.prime_product > threshold) {
      report.verdict = Verdict::Commute;
      return;
    }
  }

  report.verdict = Verdict::Inconclusive;
  report.reason = "prime budget exhausted: product of passing primes " +
                  report.prime_product.get_str() + " has not exceeded 2B = " +
                  threshold.get_str();
}

}  // namespace

CertificateReport certify_zero_commutator(const WeylQ& p, const WeylQ& q,
                                          const CertifyOptions& opts) {
  if (p.nvars() != 1 || q.nvars() != 1)
    throw DimensionMismatchError("certification needs nvars = 1");

  ClearedPair cleared = clear_pair(p, q);
  BigInt lambda_mu = cleared.lambda * cleared.mu;

  CertificateReport report;
  report.majorant = majorant_bound(cleared.pint, cleared.qint);
  if (opts.cross_check) report.cross_commutator = commutator(p, q);

  run_prime_certificate(
      report, opts,
      [&](std::uint64_t candidate, std::string* reason) {
        if (mpz_divisible_ui_p(lambda_mu.get_mpz_t(), candidate)) {
          if (reason) *reason = "divides a denominator";
          return false;
        }
        return true;
      },
      [&](Prime prime, PrimeOutcome&) {
        return commutator(reduce_mod_p(p, prime), reduce_mod_p(q, prime)).is_zero();
      });
  return report;
}

CertificateReport theorem_pipeline(const WeylQ& a, const WeylQ& p, const WeylQ& q,
                                   const CertifyOptions& opts) {
  if (a.nvars() != 1 || p.nvars() != 1 || q.nvars() != 1)
    throw DimensionMismatchError("the theorem pipeline needs nvars = 1");

  CertificateReport report;
  if (opts.cross_check) report.cross_commutator = commutator(p, q);

  // Hypotheses hold globally over Q, so they are checked exactly, not mod p.
  Degree deg_a = total_degree(a);
  if (!deg_a || *deg_a < 1) {
    report.verdict = Verdict::Inconclusive;
    report.reason = "hypothesis failure: a is constant";
    return report;
  }
  if (!commutator(a, p).is_zero()) {
    report.verdict = Verdict::Inconclusive;
    report.reason = "hypothesis failure: [a,P] != 0";
    return report;
  }
  if (!commutator(a, q).is_zero()) {
    report.verdict = Verdict::Inconclusive;
    report.reason = "hypothesis failure: [a,Q] != 0";
    return report;
  }

  GoodPrimeFilter filter = compute_u(a);
  ClearedPair cleared = clear_pair(p, q);
  filter.extra.push_back(cleared.lambda);
  filter.extra.push_back(cleared.mu);

  report.majorant = majorant_bound(cleared.pint, cleared.qint);

  run_prime_certificate(
      report, opts,
      [&](std::uint64_t candidate, std::string* reason) {
        return filter.is_good(candidate, reason);
      },
      [&](Prime prime, PrimeOutcome& outcome) {
        WeylFp ap = reduce_mod_p(a, prime);
        WeylFp pp = reduce_mod_p(p, prime);
        WeylFp qp = reduce_mod_p(q, prime);
        PipelineTrace trace;
        trace.tot_a = ap.is_zero() ? -1 : *total_degree(ap);
        trace.a_central = is_central(ap);
        trace.a_p_commutes = commutator(ap, pp).is_zero();
        trace.a_q_commutes = commutator(ap, qp).is_zero();
        trace.p_q_commutes = commutator(pp, qp).is_zero();
        outcome.trace = trace;
        return trace.p_q_commutes;
      });
  return report;
}

}  // namespace weylcent
