#include <benchmark/benchmark.h>

#include "liederiv/bideriv.hpp"
#include "liederiv/prng.hpp"
#include "liederiv/twolocal.hpp"

namespace {

void BM_der_space(benchmark::State& state) {
  const liederiv::Module v = liederiv::build_Vn(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(liederiv::der_space(v.algebra(), v));
  }
}
BENCHMARK(BM_der_space)->Arg(2)->Arg(8)->Arg(16)->Arg(30);

void BM_ider_space(benchmark::State& state) {
  const liederiv::Module v = liederiv::build_Vn(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(liederiv::ider_space(v.algebra(), v));
  }
}
BENCHMARK(BM_ider_space)->Arg(2)->Arg(8)->Arg(16)->Arg(30);

void BM_bder_space(benchmark::State& state) {
  const liederiv::Module v = liederiv::build_Vn(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(liederiv::bder_space(v.algebra(), v));
  }
}
BENCHMARK(BM_bder_space)->Arg(2)->Arg(6)->Arg(12);

void BM_verify_theorem1(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(liederiv::verify_theorem1(state.range(0), 10, 42));
  }
}
BENCHMARK(BM_verify_theorem1)->Arg(2)->Arg(6)->Arg(12);

void BM_rref(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  liederiv::SplitMix64 rng(1);
  liederiv::Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      m(r, c) = liederiv::Rational(rng.next_in_range(-9, 9));
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(liederiv::rref(m));
  }
}
BENCHMARK(BM_rref)->Arg(8)->Arg(32)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
