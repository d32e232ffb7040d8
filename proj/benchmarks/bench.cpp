#include <benchmark/benchmark.h>

#include <cstddef>
#include <cstdint>
#include <vector>

#include <idemgen/closure.hpp>
#include <idemgen/counting.hpp>
#include <idemgen/digraph.hpp>
#include <idemgen/genset.hpp>
#include <idemgen/partition_map.hpp>

namespace {

using idemgen::PartitionMap;
namespace cnt = idemgen::counting;

std::vector<PartitionMap> idempotent_generators(std::size_t m, std::size_t n) {
  std::vector<PartitionMap> gens;
  for (const auto& f : idemgen::all_partition_idempotents(m, n)) {
    if (!(f == PartitionMap::identity(m, n))) gens.push_back(f);
  }
  return gens;
}

void closure_of_idempotents(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  const auto gens = idempotent_generators(m, n);
  idemgen::ClosureOptions opts;
  opts.workers = static_cast<unsigned>(state.range(2));
  const auto one = PartitionMap::identity(m, n);
  for (auto _ : state) {
    const auto result = idemgen::generate(gens, one, opts);
    benchmark::DoNotOptimize(result.elements.data());
  }
  state.counters["elements"] = static_cast<double>(
      idemgen::generate(gens, one, opts).size());
}
BENCHMARK(closure_of_idempotents)
    ->Args({2, 2, 1})
    ->Args({3, 2, 1})
    ->Args({3, 2, 4})
    ->Args({2, 3, 1})
    ->Args({2, 3, 4})
    ->Unit(benchmark::kMillisecond);

void sc_digraph_count_table(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    cnt::BigCount total = 0;
    for (std::size_t k = 0; k <= n * (n - 1) / 2; ++k) {
      total += cnt::sc_complete_digraph_count(n, k);
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(sc_digraph_count_table)->Arg(5)->Arg(8)->Arg(12);

void idempotent_count_routes(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  const bool direct = state.range(2) != 0;
  for (auto _ : state) {
    const cnt::BigCount value =
        direct ? cnt::partition_idempotent_count_direct(m, n)
               : cnt::partition_idempotent_count(m, n);
    benchmark::DoNotOptimize(value);
  }
}
BENCHMARK(idempotent_count_routes)
    ->Args({6, 6, 1})
    ->Args({6, 6, 0})
    ->Args({10, 8, 1})
    ->Args({10, 8, 0});

void digraph_census(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::uint64_t total = 0;
    for (std::size_t k = 0; k <= n * (n - 1) / 2; ++k) {
      total += idemgen::census_sc_complete_digraphs(n, k);
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(digraph_census)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void minimal_extraction(benchmark::State& state) {
  const auto idems = idemgen::all_partition_idempotents(2, 2);
  for (auto _ : state) {
    const auto minimal = idemgen::extract_minimal_from(idems);
    benchmark::DoNotOptimize(minimal.data());
  }
}
BENCHMARK(minimal_extraction)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
