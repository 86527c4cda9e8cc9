// Copyright 2026 The netctrl Authors. All Rights Reserved.
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

#ifndef NETCTRL_TESTS_SUPPORT_FIXTURES_H_
#define NETCTRL_TESTS_SUPPORT_FIXTURES_H_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "netctrl/system_model.h"

namespace netctrl::testing {

inline std::string DataPath(const std::string& name) {
  return std::string(NETCTRL_TEST_DATA_DIR) + "/" + name;
}

inline StructuredSystem NineStateIo() { return load_system(DataPath("nine_state_io.sys")); }
inline StructuredSystem DrivenTree() { return load_system(DataPath("driven_tree.sys")); }
inline StructuredSystem NineStateTargets() { return load_system(DataPath("nine_state_targets.sys")); }

// 1-based labels -> 0-based indices.
inline std::vector<int> Nodes(std::initializer_list<int> labels) {
  std::vector<int> out;
  for (int v : labels) out.push_back(v - 1);
  return out;
}

inline std::vector<Edge> RandomEdges(int n, double density, std::mt19937_64& rng,
                                     bool allow_self_loops = true) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((i != j || allow_self_loops) && coin(rng)) edges.push_back({i, j});
  return edges;
}

// Sparse graph with roughly `num_edges` random arcs; O(num_edges) to build.
inline std::vector<Edge> RandomSparseEdges(int n, std::int64_t num_edges,
                                           std::mt19937_64& rng) {
  std::uniform_int_distribution<int> node(0, n - 1);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(num_edges));
  for (std::int64_t k = 0; k < num_edges; ++k)
    edges.push_back({node(rng), node(rng)});
  return edges;
}

inline std::vector<int> RandomSubset(int n, int size, std::mt19937_64& rng) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min(size, n));
  std::sort(all.begin(), all.end());
  return all;
}

// Random target-control instance: n states, |A| <= max_available,
// 1 <= |T| <= max_targets.
inline StructuredSystem RandomTargetSystem(int n, int max_available,
                                           int max_targets, double density,
                                           std::mt19937_64& rng) {
  std::uniform_int_distribution<int> na(1, std::min(n, max_available));
  std::uniform_int_distribution<int> nt(1, std::min(n, max_targets));
  auto edges = RandomEdges(n, density, rng);
  auto available = RandomSubset(n, na(rng), rng);
  auto targets = RandomSubset(n, nt(rng), rng);
  return StructuredSystem(n, std::move(edges), std::move(available),
                          std::move(targets));
}

// Random system with explicit input columns and output rows.
inline StructuredSystem RandomIoSystem(int n, int m, int p, double density,
                                       std::mt19937_64& rng) {
  std::uniform_int_distribution<int> width(1, 2);
  auto edges = RandomEdges(n, density, rng);
  StructuredSystem::NodeSets inputs, outputs;
  for (int k = 0; k < m; ++k) inputs.push_back(RandomSubset(n, width(rng), rng));
  for (int l = 0; l < p; ++l)
    outputs.push_back(RandomSubset(n, width(rng), rng));
  return StructuredSystem(n, std::move(edges), {}, {}, std::move(inputs),
                          std::move(outputs));
}

}  // namespace netctrl::testing

#endif  // NETCTRL_TESTS_SUPPORT_FIXTURES_H_
