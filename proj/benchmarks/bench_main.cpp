#include "simplicode/bounds.hpp"
#include "simplicode/codes.hpp"
#include "simplicode/geometry.hpp"
#include "simplicode/spectra.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace simplicode;

namespace {

SupportFamily binary_19_weight() {
  std::vector<Mask> s{mask_from_coordinates(std::vector<int>{1, 2, 3, 4, 5}),
                      mask_from_coordinates(std::vector<int>{1, 2, 6, 7, 8, 9}),
                      mask_from_coordinates(std::vector<int>{1, 3, 4, 6, 7, 8, 10, 11})};
  return SupportFamily::create(12, s);
}

void BM_BruteForceBinary19Weight(benchmark::State& state) {
  const FieldSpec field(2);
  const auto gen = build_generator(complement_defining_set(binary_19_weight(), field));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_spectrum(gen, field));
}
BENCHMARK(BM_BruteForceBinary19Weight)->Unit(benchmark::kMillisecond);

void BM_BruteForceOdd(benchmark::State& state) {
  const FieldSpec field(static_cast<std::uint32_t>(state.range(0)));
  const int m = static_cast<int>(state.range(1));
  std::vector<Mask> s{0b11, 0b1110};
  const auto gen = build_generator(complement_defining_set(SupportFamily::create(m, s), field));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_spectrum(gen, field));
}
BENCHMARK(BM_BruteForceOdd)->Args({3, 8})->Args({5, 6})->Args({4, 8})->Unit(benchmark::kMillisecond);

void BM_TableBinary19Weight(benchmark::State& state) {
  const auto f = binary_19_weight();
  for (auto _ : state) benchmark::DoNotOptimize(h_specialized_spectrum(f, 2));
}
BENCHMARK(BM_TableBinary19Weight);

void BM_ClassWalk(benchmark::State& state) {
  const int h = static_cast<int>(state.range(0));
  std::vector<Mask> s;
  for (int i = 0; i < h; ++i) s.push_back(Mask{0b111} << (2 * i));  // chain, neighbours share one coordinate
  const auto f = SupportFamily::create(2 * h + 2, s);
  for (auto _ : state) benchmark::DoNotOptimize(class_walk_spectrum(f, 3));
}
BENCHMARK(BM_ClassWalk)->DenseRange(2, 6);

void BM_ClassifyBinary19Weight(benchmark::State& state) {
  const auto f = binary_19_weight();
  const auto params = complement_parameters(f, 2);
  for (auto _ : state) benchmark::DoNotOptimize(classify(f, 2, params));
}
BENCHMARK(BM_ClassifyBinary19Weight);

void BM_FieldMul(benchmark::State& state) {
  const FieldSpec field(static_cast<std::uint32_t>(state.range(0)));
  std::mt19937 rng(1);
  std::vector<Element> xs(4096);
  for (auto& x : xs) x = Element(rng() % field.q());
  for (auto _ : state) {
    Element acc = field.one();
    for (const auto& x : xs) acc = field.mul(acc, x.is_zero() ? field.one() : x);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_FieldMul)->Arg(7)->Arg(256)->Arg(65536);

}  // namespace

BENCHMARK_MAIN();
