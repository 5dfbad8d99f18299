#include <benchmark/benchmark.h>

#include <random>

#include "weylcent/centralizer.hpp"
#include "weylcent/certifier.hpp"
#include "weylcent/parser.hpp"

using namespace weylcent;

namespace {

WeylQ random_q_element(std::mt19937_64& rng, int maxdeg) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  WeylQ e(1, RationalRing{});
  for (const MonomialKey& k : monomials_up_to(1, maxdeg)) {
    e.add_term(k, Rational(long(coeff(rng))));
  }
  return e;
}

void BM_mul_rational(benchmark::State& state) {
  std::mt19937_64 rng(1);
  WeylQ a = random_q_element(rng, int(state.range(0)));
  WeylQ b = random_q_element(rng, int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_mul_rational)->Arg(4)->Arg(8);

void BM_mul_fp(benchmark::State& state) {
  std::mt19937_64 rng(2);
  Prime p(5);
  WeylQ a = random_q_element(rng, int(state.range(0)));
  WeylQ b = random_q_element(rng, int(state.range(0)));
  WeylFp af = reduce_mod_p(a, p), bf = reduce_mod_p(b, p);
  for (auto _ : state) benchmark::DoNotOptimize(af * bf);
}
BENCHMARK(BM_mul_fp)->Arg(4)->Arg(8);

void BM_centralizer(benchmark::State& state) {
  WeylFp a = parse_fp("x^2 + d", 1, Prime(5));
  for (auto _ : state) {
    benchmark::DoNotOptimize(centralizer_basis(a, int(state.range(0))));
  }
}
BENCHMARK(BM_centralizer)->Arg(6)->Arg(10);

void BM_certify(benchmark::State& state) {
  WeylQ l = parse_rational("x^2*d - x", 1);
  WeylQ p = l * l + l;
  WeylQ q = l * l * l;
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify_zero_commutator(p, q));
  }
}
BENCHMARK(BM_certify);

}  // namespace

BENCHMARK_MAIN();
