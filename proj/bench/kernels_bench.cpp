// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <map>

#include "opzd/engine.hpp"
#include "opzd/enumeration.hpp"
#include "opzd/families.hpp"
#include "opzd/kernels.hpp"

using namespace opzd;

namespace {

  ElementStore const& z1(std::size_t n) {
    static std::map<std::size_t, ElementStore> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, enumerate(SemigroupId::Z(n, 1))).first;
    return it->second;
  }

  template <bool Parallel>
  void product_table(benchmark::State& state) {
    auto const& s = z1(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
      auto t = Parallel ? kernels::parallel::product_table(s) : kernels::serial::product_table(s);
      benchmark::DoNotOptimize(t);
    }
    state.counters["elements"] = static_cast<double>(s.size());
  }

  template <bool Parallel>
  void pair_scan(benchmark::State& state) {
    auto const& s = z1(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
      auto p = Parallel ? kernels::parallel::pair_scan(s) : kernels::serial::pair_scan(s);
      benchmark::DoNotOptimize(p);
    }
  }

  template <bool Parallel>
  void closure_b(benchmark::State& state) {
    auto const n    = static_cast<std::size_t>(state.range(0));
    auto const gens = family(FamilyName::B, n).elements;
    for (auto _ : state) {
      auto c = closure(gens, {Parallel});
      benchmark::DoNotOptimize(c);
    }
  }

}  // namespace

BENCHMARK(product_table<false>)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(product_table<true>)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(pair_scan<false>)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(pair_scan<true>)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(closure_b<false>)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(closure_b<true>)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
