// Copyright 2026 The tsms Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "tsms/necessary.h"
#include "tsms/oracle.h"
#include "tsms/sms.h"
#include "tsms/solutions.h"

namespace tsms {
namespace {

void run_sms(benchmark::State& state, Rule rule, Weight n) {
  const int m = static_cast<int>(state.range(0));
  const WeightedTournament t = random_tournament(m, n, 7);
  const Candidate w = winners(rule, t).winners.front();
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_sms(rule, t, w));
  }
  state.SetComplexityN(m);
}

void BM_SmsTopCycle(benchmark::State& s) { run_sms(s, Rule::kTopCycle, 1); }
void BM_SmsUncovered(benchmark::State& s) { run_sms(s, Rule::kUncoveredSet, 1); }
void BM_SmsCopeland(benchmark::State& s) { run_sms(s, Rule::kCopeland, 1); }
void BM_SmsBorda(benchmark::State& s) { run_sms(s, Rule::kBorda, 1'000'000); }
void BM_SmsMaximin(benchmark::State& s) { run_sms(s, Rule::kMaximin, 1'000'000); }
void BM_SmsWeightedUncovered(benchmark::State& s) {
  run_sms(s, Rule::kWeightedUncoveredSet, 7);
}

BENCHMARK(BM_SmsTopCycle)->RangeMultiplier(2)->Range(125, 2000)->Complexity();
BENCHMARK(BM_SmsUncovered)->RangeMultiplier(2)->Range(125, 2000)->Complexity();
BENCHMARK(BM_SmsCopeland)->RangeMultiplier(2)->Range(125, 2000)->Complexity();
BENCHMARK(BM_SmsBorda)->RangeMultiplier(2)->Range(25, 400)->Complexity();
BENCHMARK(BM_SmsMaximin)->RangeMultiplier(2)->Range(25, 400)->Complexity();
BENCHMARK(BM_SmsWeightedUncovered)->DenseRange(4, 10, 2);

void BM_NecessaryWinner(benchmark::State& state) {
  const Rule rule = static_cast<Rule>(state.range(1));
  const int m = static_cast<int>(state.range(0));
  const Weight n = requires_unweighted(rule) ? 1 : 9;
  const PartialTournament g = random_partial_tournament(m, n, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_necessary_winner(g, 0, rule));
  }
}
BENCHMARK(BM_NecessaryWinner)
    ->ArgsProduct({{50, 200}, {0, 1, 2, 3, 4, 5}})
    ->ArgNames({"m", "rule"});

void BM_OracleUnweighted(benchmark::State& state) {
  const WeightedTournament t = random_tournament(static_cast<int>(state.range(0)), 1, 5);
  const Candidate w = uncovered_set(t).winners.front();
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_sms_size(t, w, Rule::kUncoveredSet));
  }
}
BENCHMARK(BM_OracleUnweighted)->DenseRange(4, 6);

}  // namespace
}  // namespace tsms

BENCHMARK_MAIN();
