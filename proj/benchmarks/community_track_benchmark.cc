// Copyright 2026 The community_track Authors.
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

#include <vector>

#include "community_track/dynamic.h"
#include "community_track/louvain.h"
#include "community_track/metrics.h"
#include "community_track/synth.h"

namespace community_track {
namespace {

// Planted graph with `communities` blocks of 100 nodes and about 15
// neighbors per node.
PlantedConfig Config(int communities) {
  PlantedConfig config;
  config.communities = communities;
  config.size = 100;
  config.p_in = 0.14;
  config.p_out = 1.0 / (communities * 100);
  config.seed = 1;
  return config;
}

void BM_PlantedGraph(benchmark::State& state) {
  const PlantedConfig config = Config(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(GeneratePlantedGraph(config));
  }
  state.SetItemsProcessed(state.iterations() * config.communities * config.size);
}
BENCHMARK(BM_PlantedGraph)->Arg(10)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Modularity(benchmark::State& state) {
  ExternalPartition truth;
  const Snapshot graph = *GeneratePlantedGraph(Config(static_cast<int>(state.range(0))), &truth);
  std::vector<CommunityId> labels(graph.node_count());
  for (NodeId u = 0; u < graph.node_count(); ++u) {
    labels[u] = truth.communities.at(graph.external_id(u));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(Modularity(graph.view(), labels));
  }
  state.SetItemsProcessed(state.iterations() * graph.edge_count());
}
BENCHMARK(BM_Modularity)->Arg(10)->Arg(100)->Arg(1000)->Unit(benchmark::kMicrosecond);

void BM_Louvain(benchmark::State& state) {
  const Snapshot graph = *GeneratePlantedGraph(Config(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunLouvain(graph, Partition::Singletons(graph.node_count())));
  }
  state.SetItemsProcessed(state.iterations() * graph.edge_count());
}
BENCHMARK(BM_Louvain)->Arg(10)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Evolve(benchmark::State& state) {
  PlantedConfig config = Config(static_cast<int>(state.range(0)));
  const PlantedPair pair = *GeneratePlantedPair(config);
  ExternalPartition previous =
      ToExternal(pair.t, RunLouvain(pair.t, Partition::Singletons(pair.t.node_count()))
                             ->partition.Compacted());
  previous.max_old_community = previous.MaxCommunityId();
  DynamicParams params;
  params.p = state.range(1) / 100.0;
  params.q = 0.5;
  params.seed = 3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Evolve(pair.t1, previous, params));
  }
  state.SetItemsProcessed(state.iterations() * pair.t1.edge_count());
}
BENCHMARK(BM_Evolve)
    ->Args({100, 0})
    ->Args({100, 50})
    ->Args({100, 100})
    ->Args({1000, 50})
    ->Unit(benchmark::kMillisecond);

void BM_Report(benchmark::State& state) {
  const PlantedPair pair = *GeneratePlantedPair(Config(static_cast<int>(state.range(0))));
  ExternalPartition previous =
      ToExternal(pair.t, RunLouvain(pair.t, Partition::Singletons(pair.t.node_count()))
                             ->partition.Compacted());
  const Partition current =
      RunLouvain(pair.t1, Partition::Singletons(pair.t1.node_count()))->partition;
  for (auto _ : state) {
    benchmark::DoNotOptimize(BuildReport(pair.t1, previous, current));
  }
}
BENCHMARK(BM_Report)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace community_track

BENCHMARK_MAIN();
