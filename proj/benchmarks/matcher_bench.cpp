#include <benchmark/benchmark.h>

#include <algorithm>
#include <map>

#include "monomatch/matcher.hpp"
#include "monomatch/monoid.hpp"
#include "monomatch/pipeline.hpp"

namespace {

using namespace monomatch;

// Shared input cache so each benchmark does not regenerate megabytes.
const ByteText& input_of(std::size_t bytes, unsigned alphabet) {
  static std::map<std::pair<std::size_t, unsigned>, ByteText> cache;
  auto [it, fresh] = cache.try_emplace({bytes, alphabet});
  if (fresh) {
    Rng rng(bytes ^ alphabet);
    it->second = random_byte_text_exact(rng, bytes, alphabet);
  }
  return it->second;
}

void BM_ToSm(benchmark::State& state) {
  const auto& input = input_of(static_cast<std::size_t>(state.range(0)), 256);
  const ByteText target = input.substring(input.size() / 2, 8);
  for (auto _ : state) benchmark::DoNotOptimize(to_sm(input, target));
  state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ToSm)->Arg(1 << 20)->Arg(16 << 20)->Unit(benchmark::kMillisecond);

// Dense matches: alphabet of 2 and a 3-byte target.
void BM_ToSmDense(benchmark::State& state) {
  const auto& input = input_of(static_cast<std::size_t>(state.range(0)), 2);
  const ByteText target("aba");
  for (auto _ : state) benchmark::DoNotOptimize(to_sm(input, target));
  state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ToSmDense)->Arg(1 << 20)->Arg(16 << 20)->Unit(benchmark::kMillisecond);

// Args: input bytes, branch, chunks per worker thread.
void BM_ToSmPar(benchmark::State& state) {
  const auto bytes = static_cast<std::size_t>(state.range(0));
  const auto& input = input_of(bytes, 256);
  const ByteText target = input.substring(bytes / 2, 8);
  const std::size_t threads = default_executor().thread_count();
  const ChunkPlan plan{static_cast<std::size_t>(state.range(1)),
                       std::max<std::size_t>(bytes / (threads * state.range(2)), 1)};
  for (auto _ : state) benchmark::DoNotOptimize(to_sm_par(plan, input, target));
  state.SetBytesProcessed(state.iterations() * state.range(0));
  state.counters["threads"] = static_cast<double>(threads);
}
BENCHMARK(BM_ToSmPar)
    ->ArgsProduct({{16 << 20}, {2, 4, 8}, {1, 4, 16}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

// One append at a chunk boundary. The boundary scan is constant; the index
// list copies grow with the operands.
void BM_SmAppend(benchmark::State& state) {
  const auto& input = input_of(static_cast<std::size_t>(state.range(0)), 2);
  const ByteText target("abbab");
  const std::size_t half = input.size() / 2;
  const StringMatcher left = to_sm(input.take(half), target);
  const StringMatcher right = to_sm(input.drop(half), target);
  for (auto _ : state) benchmark::DoNotOptimize(sm_append(left, right));
}
BENCHMARK(BM_SmAppend)->Arg(1 << 10)->Arg(1 << 20);

void BM_Pmconcat(benchmark::State& state) {
  const auto& input = input_of(1 << 20, 4);
  const auto pieces = chunk(static_cast<std::size_t>(state.range(0)), input);
  const auto ops = byte_text_ops();
  for (auto _ : state) benchmark::DoNotOptimize(pmconcat(ops, 4, pieces));
  state.counters["pieces"] = static_cast<double>(pieces.size());
}
BENCHMARK(BM_Pmconcat)->Arg(64)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
