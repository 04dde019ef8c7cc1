// framoid - exact computations in framed and tied diagram monoids

#include <benchmark/benchmark.h>

#include "framoid/algebra.hpp"
#include "framoid/family.hpp"
#include "framoid/normal_form.hpp"

namespace {
  using namespace framoid;

  void BM_closure_jdn(benchmark::State& state) {
    MonoidFamily fam(FamilyName::Jdn, 2, static_cast<int>(state.range(0)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(closure(fam).size());
    }
  }
  BENCHMARK(BM_closure_jdn)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

  void BM_closure_rprime(benchmark::State& state) {
    MonoidFamily fam(FamilyName::RPrimeDn, 2, static_cast<int>(state.range(0)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(closure(fam).size());
    }
  }
  BENCHMARK(BM_closure_rprime)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

  void BM_compose_brauer(benchmark::State& state) {
    MonoidFamily fam(FamilyName::Brdn, 3, static_cast<int>(state.range(0)));
    auto         a = evaluate(fam, parse_word("t1 s2 o1 t3 s1")).diagram;
    auto         b = evaluate(fam, parse_word("s3 t2 o2^2 t1")).diagram;
    for (auto _ : state) {
      benchmark::DoNotOptimize(compose(fam, a, b));
    }
  }
  BENCHMARK(BM_compose_brauer)->Arg(4)->Arg(8)->Arg(16);

  void BM_normal_forms(benchmark::State& state) {
    MonoidFamily fam(FamilyName::Brdn, 2, 4);
    auto const   xs = closure(fam);
    for (auto _ : state) {
      for (auto const& x : xs) {
        benchmark::DoNotOptimize(brauer_nf(x));
      }
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
  }
  BENCHMARK(BM_normal_forms)->Unit(benchmark::kMillisecond);

  void BM_jones_normal_forms(benchmark::State& state) {
    MonoidFamily fam(FamilyName::Jdn, 2, 5);
    auto const   xs = closure(fam);
    for (auto _ : state) {
      for (auto const& x : xs) {
        benchmark::DoNotOptimize(jones_nf(x));
      }
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
  }
  BENCHMARK(BM_jones_normal_forms)->Unit(benchmark::kMillisecond);

  void BM_algebra_multiply(benchmark::State& state) {
    int const    d = static_cast<int>(state.range(0));
    MonoidFamily fam(FamilyName::Jdn, d, 4);
    auto         e = bridge_e(fam, LoopPolicy::alpha, 1, 2);
    auto         f = bridge_f(fam, LoopPolicy::alpha, 2);
    for (auto _ : state) {
      benchmark::DoNotOptimize(e * f * e);
    }
  }
  BENCHMARK(BM_algebra_multiply)->DenseRange(2, 5);
}  // namespace

BENCHMARK_MAIN();
