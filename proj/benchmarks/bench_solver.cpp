// Copyright 2026 The Baccara Solver Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "baccara/dominance.hpp"
#include "baccara/envelope.hpp"
#include "baccara/payoff.hpp"
#include "baccara/solver.hpp"

using namespace baccara;

namespace {

InfoModel info_of(std::int64_t i) { return static_cast<InfoModel>(i); }

void BM_BuildBlocks(benchmark::State& state) {
  const auto deal = DealModel::shoe(state.range(0));
  const auto info = info_of(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_blocks(deal, info));
}
BENCHMARK(BM_BuildBlocks)
    ->ArgsProduct({{1, 6, 100}, {1, 3}})
    ->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  const auto blocks = build_blocks(DealModel::shoe(state.range(0)), InfoModel::FullComposition);
  for (auto _ : state) benchmark::DoNotOptimize(classify(blocks));
}
BENCHMARK(BM_Classify)->Arg(1)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_EnvelopeTwoRow(benchmark::State& state) {
  const auto ctx = build_context(DealModel::shoe(state.range(0)), InfoModel::FullComposition);
  const ReducedGame reduced(ctx.blocks, ctx.table);
  const auto game = reduced.two_row(ctx.blocks.row_index(PlayerMask(kKernelRowStandOnOneFour)),
                                    ctx.blocks.row_index(PlayerMask(kKernelRowDrawOnOneFour)));
  for (auto _ : state) benchmark::DoNotOptimize(solve(game));
}
BENCHMARK(BM_EnvelopeTwoRow)->Arg(6)->Arg(12)->Unit(benchmark::kMicrosecond);

void BM_SolveModel(benchmark::State& state) {
  const auto deal = DealModel::shoe(state.range(0));
  const auto info = info_of(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(solve_model(deal, info));
}
BENCHMARK(BM_SolveModel)
    ->ArgsProduct({{1, 6}, {1, 2, 3}})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
