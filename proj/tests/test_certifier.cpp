#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "weylcent/certifier.hpp"
#include "weylcent/parser.hpp"

using namespace weylcent;
using namespace weylcent::testing;

namespace {

WeylQ q(const char* text) { return parse_rational(text, 1); }

}  // namespace

TEST_CASE("clear_denominators") {
  {
    auto [elem, factor] = clear_denominators(q("1/2*d + x"));
    CHECK(factor == 2);
    CHECK(elem == q("d + 2*x"));
  }
  {
    auto [elem, factor] = clear_denominators(q("x*d"));
    CHECK(factor == 1);
    CHECK(elem == q("x*d"));
  }
  {
    auto [elem, factor] = clear_denominators(q("1/6*x + 1/4"));
    CHECK(factor == 12);
    CHECK(elem == q("2*x + 3"));
  }
}

TEST_CASE("compute_u") {
  {
    GoodPrimeFilter f = compute_u(q("x^2*d + 3*x - 1"));
    CHECK(f.n == 3);
    CHECK(f.factorial_n == 6);
    CHECK(f.u == 6);
    CHECK(!f.is_good(2));
    CHECK(!f.is_good(3));
    CHECK(f.is_good(5));
    CHECK(f.is_good(7));
  }
  {
    GoodPrimeFilter f = compute_u(q("d^2 - x"));
    CHECK(f.n == 2);
    CHECK(f.factorial_n == 2);
    CHECK(f.u == 2);
    CHECK(!f.is_good(2));
    CHECK(f.is_good(3));
  }
  CHECK_THROWS_AS(compute_u(q("5")), ConstantOperatorError);
  CHECK_THROWS_AS(compute_u(WeylQ(1, RationalRing{})), ConstantOperatorError);
}

TEST_CASE("compute_u includes the clearing factor among bad primes") {
  GoodPrimeFilter f = compute_u(q("1/7*x^2"));  // cleared: x^2, factor 7
  CHECK(f.n == 2);
  CHECK(f.u == 2);
  std::string reason;
  CHECK(!f.is_good(7, &reason));
  CHECK(reason == "divides a denominator");
  CHECK(f.is_good(5));
}

TEST_CASE("majorant_bound spec cases") {
  {
    BigInt b = majorant_bound(q("x"), q("d"));
    CHECK(b >= 1);  // |[x,d]| = 1
  }
  {
    BigInt b = majorant_bound(q("x*d + 1"), q("x*d + 1"));
    CHECK(b >= 0);
  }
  {
    // |d^2|*|x^2| + |x^2|*|d^2| = 2x^2d^2 + 4xd + 2, so B = 4
    BigInt b = majorant_bound(q("d^2"), q("x^2"));
    CHECK(b == 4);
    WeylQ c = commutator(q("d^2"), q("x^2"));
    CHECK(c == q("4*x*d + 2"));
    for (const auto& [k, coeff] : c.terms()) {
      CHECK(coeff.abs() <= Rational(b));
    }
  }
}

TEST_CASE("majorant bounds the commutator coefficients on random pairs") {
  std::mt19937_64 rng(1313);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int it = 0; it < 60; ++it) {
    WeylQ a(1, RationalRing{}), b(1, RationalRing{});
    for (const MonomialKey& k : monomials_up_to(1, 4)) {
      a.add_term(k, Rational(long(coeff(rng))));
      b.add_term(k, Rational(long(coeff(rng))));
    }
    BigInt bound = majorant_bound(a, b);
    WeylQ c_ab = commutator(a, b);
    for (const auto& [k, c] : c_ab.terms()) {
      CHECK(c.abs() <= Rational(bound));
    }
  }
}

TEST_CASE("certify: polynomials in d commute") {
  CertificateReport r = certify_zero_commutator(q("d^2"), q("d^3"));
  CHECK(r.verdict == Verdict::Commute);
  CHECK(r.cross_checked());
  CHECK(r.cross_zero());
  // B = 2, threshold 4: passes at 2 and 3
  CHECK(r.majorant == 2);
  CHECK(r.prime_product == 6);
}

TEST_CASE("certify: the written Airy pair does not commute") {
  // [d^2 - x, d^3 - 3/2 x d - 3/4] = -3/2 x: zero mod 3 (numerator 3) but
  // nonzero at every other prime, so the certificate must not stop at 3.
  WeylQ p = q("d^2 - x");
  WeylQ qq = q("d^3 - 3/2*x*d - 3/4");
  CHECK(commutator(p, qq) == q("-3/2*x"));

  CertificateReport r = certify_zero_commutator(p, qq);
  CHECK(r.verdict == Verdict::NotCommute);
  CHECK(!r.cross_zero());
  CHECK(r.majorant == 30);
  REQUIRE(r.primes.size() == 3);
  CHECK(r.primes[0].p == 2);
  CHECK(r.primes[0].status == PrimeOutcome::Status::Skipped);
  CHECK(r.primes[0].skip_reason == "divides a denominator");
  CHECK(r.primes[1].p == 3);
  CHECK(r.primes[1].status == PrimeOutcome::Status::Pass);
  CHECK(r.primes[2].p == 5);
  CHECK(r.primes[2].status == PrimeOutcome::Status::Fail);
}

TEST_CASE("certify: [x,d] fails at the first prime") {
  CertificateReport r = certify_zero_commutator(q("x"), q("d"));
  CHECK(r.verdict == Verdict::NotCommute);
  REQUIRE(r.primes.size() == 1);
  CHECK(r.primes[0].p == 2);
  CHECK(r.primes[0].status == PrimeOutcome::Status::Fail);
}

TEST_CASE("certify: agreement with the rational oracle on random pairs") {
  std::mt19937_64 rng(1414);
  for (int it = 0; it < 50; ++it) {
    WeylQ a = random_q(rng, 1, 4);
    WeylQ b = random_q(rng, 1, 4);
    CertificateReport r = certify_zero_commutator(a, b);
    REQUIRE(r.cross_checked());
    CHECK((r.verdict == Verdict::Commute) == r.cross_zero());
    CHECK((r.verdict == Verdict::NotCommute) == !r.cross_zero());
  }
}

TEST_CASE("certify: commuting pairs built as polynomials in a common operator") {
  std::mt19937_64 rng(1515);
  for (int it = 0; it < 10; ++it) {
    WeylQ base = random_q(rng, 1, 2);
    WeylQ p = base * base + base;            // p(L) = L^2 + L
    WeylQ qq = base * base * base - q("3");  // q(L) = L^3 - 3
    CertificateReport r = certify_zero_commutator(p, qq);
    CHECK(r.verdict == Verdict::Commute);
    CHECK(r.cross_zero());
  }
}

TEST_CASE("certify: zero operands certify immediately") {
  CertificateReport r = certify_zero_commutator(WeylQ(1, RationalRing{}), q("x"));
  CHECK(r.verdict == Verdict::Commute);
  CHECK(r.majorant == 0);
  CHECK(r.primes.empty());
}

TEST_CASE("certify: monotone in the prime budget") {
  WeylQ p = q("x*d"), qq = q("x*d*x*d + x*d");
  CertifyOptions small, large;
  small.max_primes = 8;
  large.max_primes = 64;
  CertificateReport rs = certify_zero_commutator(p, qq, small);
  CertificateReport rl = certify_zero_commutator(p, qq, large);
  CHECK(rs.verdict == Verdict::Commute);
  CHECK(rl.verdict == Verdict::Commute);
}

TEST_CASE("certify: exhausted budget reports inconclusive with the shortfall") {
  CertifyOptions opts;
  opts.max_primes = 1;
  WeylQ l = q("x^2*d");
  CertificateReport r = certify_zero_commutator(l, l * l, opts);
  CHECK(r.verdict == Verdict::Inconclusive);
  CHECK(r.reason.find("prime budget exhausted") == 0);
  CHECK(r.cross_zero());  // the pair does commute; the budget was just too small
}

TEST_CASE("certify: cross-check can be disabled") {
  CertifyOptions opts;
  opts.cross_check = false;
  CertificateReport r = certify_zero_commutator(q("d^2"), q("d^3"), opts);
  CHECK(!r.cross_checked());
  CHECK(r.verdict == Verdict::Commute);
}

TEST_CASE("theorem pipeline: commuting family in x*d") {
  WeylQ a = q("x*d");
  WeylQ p = q("x*d*x*d");        // a^2
  WeylQ qq = q("x*d*x*d*x*d");   // a^3
  CertificateReport r = theorem_pipeline(a, p, qq);
  CHECK(r.verdict == Verdict::Commute);
  CHECK(r.cross_zero());

  // u = 2! * 1 = 2: only 2 is skipped for u, everything else is good
  bool saw_good = false;
  for (const PrimeOutcome& o : r.primes) {
    if (o.status == PrimeOutcome::Status::Skipped) {
      CHECK(o.p == 2);
      CHECK(o.skip_reason == "divides u");
      continue;
    }
    saw_good = true;
    REQUIRE(o.trace.has_value());
    CHECK(o.trace->tot_a == 2);
    CHECK(o.p % 2 != 0);  // tot(a) = 2 is prime to every good p
    CHECK(!o.trace->a_central);
    CHECK(o.trace->a_p_commutes);
    CHECK(o.trace->a_q_commutes);
    CHECK(o.trace->p_q_commutes);
  }
  CHECK(saw_good);
}

TEST_CASE("theorem pipeline: hypothesis failures are inconclusive") {
  {
    CertificateReport r = theorem_pipeline(q("d^2"), q("d^3"), q("x"));
    CHECK(r.verdict == Verdict::Inconclusive);
    CHECK(r.reason == "hypothesis failure: [a,Q] != 0");
    CHECK(r.primes.empty());
  }
  {
    CertificateReport r = theorem_pipeline(q("7"), q("d"), q("d^2"));
    CHECK(r.verdict == Verdict::Inconclusive);
    CHECK(r.reason == "hypothesis failure: a is constant");
  }
  {
    CertificateReport r = theorem_pipeline(q("d^2"), q("x"), q("d^3"));
    CHECK(r.verdict == Verdict::Inconclusive);
    CHECK(r.reason == "hypothesis failure: [a,P] != 0");
  }
  {
    // the written Airy pair: Q does not commute with a over Q
    CertificateReport r =
        theorem_pipeline(q("d^2 - x"), q("d^2 - x"), q("d^3 - 3/2*x*d - 3/4"));
    CHECK(r.verdict == Verdict::Inconclusive);
    CHECK(r.reason == "hypothesis failure: [a,Q] != 0");
  }
}

TEST_CASE("theorem pipeline: good primes preserve degree and noncentrality") {
  std::mt19937_64 rng(1616);
  for (int it = 0; it < 10; ++it) {
    WeylQ base = random_q(rng, 1, 2);
    if (!total_degree(base) || *total_degree(base) < 1) continue;
    WeylQ p = base * base;
    WeylQ qq = base * base * base;
    CertificateReport r = theorem_pipeline(base, p, qq);
    CHECK(r.verdict == Verdict::Commute);
    const int tot = *total_degree(base);
    for (const PrimeOutcome& o : r.primes) {
      if (o.status == PrimeOutcome::Status::Skipped) continue;
      REQUIRE(o.trace.has_value());
      CHECK(o.trace->tot_a == tot);
      CHECK(tot % static_cast<int>(o.p) != 0);
      CHECK(!o.trace->a_central);
      CHECK(o.trace->a_p_commutes);
      CHECK(o.trace->a_q_commutes);
    }
  }
}

TEST_CASE("reports are deterministic") {
  auto render = [](const CertificateReport& r) {
    std::string s = std::string(to_string(r.verdict)) + "|" + r.majorant.get_str() +
                    "|" + r.prime_product.get_str();
    for (const PrimeOutcome& o : r.primes) {
      s += "|" + std::to_string(o.p) + ":" + std::to_string(int(o.status));
    }
    return s;
  };
  WeylQ p = q("x*d + 1/2"), qq = q("x*d*x*d - 1/3");
  CHECK(render(certify_zero_commutator(p, qq)) ==
        render(certify_zero_commutator(p, qq)));
}
