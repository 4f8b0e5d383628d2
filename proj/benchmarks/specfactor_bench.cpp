#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "specfactor/digital.hpp"
#include "specfactor/measure.hpp"
#include "specfactor/numtheory.hpp"
#include "specfactor/susy.hpp"

namespace {

using namespace specfactor;

void BM_MoebiusTransform(benchmark::State& state) {
  const auto d = static_cast<unsigned>(state.range(0));
  std::mt19937_64 gen(1);
  std::vector<std::int64_t> e(std::size_t{1} << d);
  for (auto& v : e) v = static_cast<std::int64_t>(gen() >> 20);
  for (auto _ : state) {
    auto j = e;
    digital::moebius_transform(std::span<std::int64_t>(j));
    benchmark::DoNotOptimize(j.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(e.size()));
}
BENCHMARK(BM_MoebiusTransform)->DenseRange(8, 20, 4);

void BM_SolvePrimeCouplings(benchmark::State& state) {
  const auto d = static_cast<unsigned>(state.range(0));
  const auto targets = digital::default_targets(d, digital::TargetKind::Primes);
  const auto a = digital::Assignment::canonical(d, digital::WithinGroupOrder::Lexicographic);
  for (auto _ : state) {
    benchmark::DoNotOptimize(digital::solve_couplings(d, targets, a, digital::TargetKind::Primes));
  }
}
BENCHMARK(BM_SolvePrimeCouplings)->Arg(5)->Arg(10)->Arg(16);

void BM_Sieve(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(PrimeTable::sieve(state.range(0)));
}
BENCHMARK(BM_Sieve)->Arg(1 << 10)->Arg(1 << 16)->Arg(1 << 20);

void BM_Factorize(benchmark::State& state) {
  const auto table = PrimeTable::sieve(1 << 16);
  const auto variant = state.range(0) == 0 ? measure::Variant::A : measure::Variant::B;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(measure::factorize(2 * 2 * 3 * 5 * 7 * 11 * 13, variant, table, ++seed));
  }
}
BENCHMARK(BM_Factorize)->Arg(0)->Arg(1);

void BM_EnumeratePaths(benchmark::State& state) {
  const auto table = PrimeTable::sieve(1 << 16);
  for (auto _ : state) benchmark::DoNotOptimize(measure::enumerate_paths(30030, table));
}
BENCHMARK(BM_EnumeratePaths);

void BM_BuildPotential(benchmark::State& state) {
  const auto levels = static_cast<std::size_t>(state.range(0));
  const auto targets = spectrum_values(SpectrumSpec{SpectrumKind::LogPrimes, levels + 1, false, {}});
  for (auto _ : state) benchmark::DoNotOptimize(susy::build_potential(targets));
}
BENCHMARK(BM_BuildPotential)->Arg(8)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_VerifySpectrum(benchmark::State& state) {
  const auto levels = static_cast<std::size_t>(state.range(0));
  const auto targets = spectrum_values(SpectrumSpec{SpectrumKind::LogPrimes, levels + 1, false, {}});
  const auto pt = susy::build_potential(targets);
  for (auto _ : state) benchmark::DoNotOptimize(susy::verify_spectrum(pt));
}
BENCHMARK(BM_VerifySpectrum)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
