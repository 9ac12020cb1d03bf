// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "cohere/kernels.hpp"
#include "cohere/sweep.hpp"

namespace {

using namespace cohere;

std::shared_ptr<const logic::Universe> universe_of(std::size_t props) {
  logic::Vocabulary v;
  for (std::size_t i = 0; i < props; ++i) v.add("p" + std::to_string(i));
  return std::make_shared<const logic::Universe>(std::move(v), std::vector<logic::Formula>{}, props);
}

std::vector<logic::Formula> events_of(std::size_t props, std::size_t count) {
  std::mt19937_64 rng(42);
  std::vector<logic::Formula> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(sweep::random_formula(rng, props, 3));
  return out;
}

void BM_SignaturesSerial(benchmark::State& state) {
  const auto props = static_cast<std::size_t>(state.range(0));
  const auto u = universe_of(props);
  const auto events = events_of(props, 12);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::signatures_serial(*u, events));
}

void BM_SignaturesOmp(benchmark::State& state) {
  const auto props = static_cast<std::size_t>(state.range(0));
  const auto u = universe_of(props);
  const auto events = events_of(props, 12);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::signatures_omp(*u, events));
}

std::vector<defaults::Instance> instances() { return sweep::random_instances(7, 64, 3, 1); }

defaults::DefaultKB empty_kb() { return defaults::DefaultKB(universe_of(3), {}); }

void BM_SchemaSweepSerial(benchmark::State& state) {
  const auto inst = instances();
  const auto kb = empty_kb();
  for (auto _ : state) benchmark::DoNotOptimize(sweep::schema_sweep_serial(defaults::Schema::Cut, inst, kb));
}

void BM_SchemaSweepOmp(benchmark::State& state) {
  const auto inst = instances();
  const auto kb = empty_kb();
  for (auto _ : state) benchmark::DoNotOptimize(sweep::schema_sweep(defaults::Schema::Cut, inst, kb));
}

}  // namespace

BENCHMARK(BM_SignaturesSerial)->Arg(10)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SignaturesOmp)->Arg(10)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SchemaSweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SchemaSweepOmp)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
