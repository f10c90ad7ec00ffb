// Copyright 2026 The fermitomo Authors
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

#include "fermitomo/operations.h"
#include "fermitomo/process.h"
#include "fermitomo/random_maps.h"
#include "fermitomo/tomography.h"

namespace fermitomo {
namespace {

void BM_TransferFromKraus(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const ProcessRep p = random_valid_map(m, 1, RandomMapKind::kCptp);
  const ProcessRep kraus = to_kraus(p);
  for (auto _ : state) benchmark::DoNotOptimize(transfer_matrix(kraus));
}
BENCHMARK(BM_TransferFromKraus)->Arg(1)->Arg(2)->Arg(3);

void BM_SimulateExperiment(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const ProtocolFrame frame(m);
  const ProcessRep p = builtin_map("T", m);
  for (auto _ : state) benchmark::DoNotOptimize(simulate_experiment(p, frame));
}
BENCHMARK(BM_SimulateExperiment)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_BuildDesign(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const ProtocolFrame frame(m);
  for (auto _ : state) benchmark::DoNotOptimize(build_design(frame));
}
BENCHMARK(BM_BuildDesign)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_Reconstruct(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const ProtocolFrame frame(m);
  const DesignMatrix design = build_design(frame);
  const ExperimentRecord record = sample_record(simulate_experiment(builtin_map("T", m), frame), 10000, 3);
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_full(record, design));
}
BENCHMARK(BM_Reconstruct)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_SampleRecord(benchmark::State& state) {
  const ExperimentRecord exact = simulate_experiment(builtin_map("T", 1));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_record(exact, static_cast<std::uint64_t>(state.range(0)), ++seed));
}
BENCHMARK(BM_SampleRecord)->Arg(1000)->Arg(1000000);

}  // namespace
}  // namespace fermitomo

BENCHMARK_MAIN();
