#include <benchmark/benchmark.h>

#include "fqdiff/charsum.hpp"
#include "fqdiff/oracle.hpp"

using namespace fqdiff;

namespace {

FieldCtx field_for(std::int64_t q) {
  switch (q) {
    case 343: return FieldCtx::make(7, 3);
    case 2187: return FieldCtx::make(3, 7);
    default: return FieldCtx::make(static_cast<std::uint32_t>(q), 1);
  }
}

void BM_DdtSerial(benchmark::State& state) {
  const auto ctx = field_for(state.range(0));
  const auto table = oracle::nh_table(ctx, ctx.embed_int(2));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::ddt_histogram_serial(ctx, table));
}

void BM_DdtParallel(benchmark::State& state) {
  const auto ctx = field_for(state.range(0));
  const auto table = oracle::nh_table(ctx, ctx.embed_int(2));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::ddt_histogram(ctx, table));
}

void BM_CharSumSerial(benchmark::State& state) {
  const auto ctx = field_for(state.range(0));
  const auto f = charsum::gamma_pn_poly(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(charsum::char_sum_serial(ctx, f));
}

void BM_CharSumParallel(benchmark::State& state) {
  const auto ctx = field_for(state.range(0));
  const auto f = charsum::gamma_pn_poly(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(charsum::char_sum(ctx, f).value);
}

}  // namespace

BENCHMARK(BM_DdtSerial)->Arg(343)->Arg(2187)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DdtParallel)->Arg(343)->Arg(2187)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CharSumSerial)->Arg(4091)->Arg(2187);
BENCHMARK(BM_CharSumParallel)->Arg(4091)->Arg(2187);

BENCHMARK_MAIN();
