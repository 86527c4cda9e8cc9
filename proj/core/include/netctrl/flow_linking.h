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

#ifndef NETCTRL_FLOW_LINKING_H_
#define NETCTRL_FLOW_LINKING_H_

#include <span>
#include <string>
#include <vector>

#include "netctrl/system_model.h"

namespace netctrl {

// Node-split flow network. Every node v of the underlying digraph becomes
// v- = MinusNode(v) and v+ = PlusNode(v) joined by a unit-capacity arc;
// original edges (u, v) become (u+, v-); the source feeds every v- with v in
// V1 and every v+ with v in V2 drains into the sink. All arcs other than the
// split arcs carry `infinite_capacity`, a sentinel equal to |V2| + 1.
struct AuxiliaryGraph {
  struct Arc {
    int tail = 0;
    int head = 0;
    int capacity = 0;
  };

  int num_base_nodes = 0;
  int infinite_capacity = 1;
  // Arcs are grouped: the split arcs first (arc v is the split arc of v),
  // then edge arcs, then source arcs, then sink arcs.
  std::vector<Arc> arcs;

  static constexpr int kSource = 0;
  static int MinusNode(int v) { return 1 + 2 * v; }
  static int PlusNode(int v) { return 2 + 2 * v; }
  // Base node of a split node; -1 for source and sink.
  int BaseNode(int aux_node) const;

  int source() const { return kSource; }
  int sink() const { return 2 * num_base_nodes + 1; }
  int num_nodes() const { return 2 * num_base_nodes + 2; }
  std::size_t num_arcs() const { return arcs.size(); }

  // "s", "t", or "<base label>-" / "<base label>+" where base labels default
  // to state labels x1..xn.
  std::string NodeLabel(int aux_node) const;
};

// Integral flow; `on_arc[i]` is the flow on aux.arcs[i].
struct Flow {
  std::vector<int> on_arc;
  int value = 0;
};

using Path = std::vector<int>;

// Vertex-disjoint, simple, direct (V1-V2)-paths. A node in V1 and V2 may form
// the zero-length path {v}.
struct Linking {
  std::vector<Path> paths;

  int size() const { return static_cast<int>(paths.size()); }
  // First node of each path, in path order.
  std::vector<int> StartNodes() const;
};

// Sorted node set meeting every (V1-V2)-path.
struct Separator {
  std::vector<int> nodes;
};

// Removes every edge entering a V1 node and every edge leaving a V2 node.
Digraph preprocess_direct(const Digraph& g, std::span<const int> sources,
                          std::span<const int> sinks);

// Applies preprocess_direct implicitly: edges into sources and out of sinks
// get no arc.
AuxiliaryGraph build_auxiliary_graph(const Digraph& g,
                                     std::span<const int> sources,
                                     std::span<const int> sinks);

// Edmonds-Karp: breadth-first augmenting paths, residual arcs explored in
// ascending head order. Deterministic.
Flow max_flow(const AuxiliaryGraph& aux);

// Nodes reachable from the source in the residual network of `flow`, sorted.
// Throws PreconditionError if the sink is reachable (flow not maximum).
std::vector<int> min_cut_source_set(const AuxiliaryGraph& aux,
                                    const Flow& flow);

// Decomposes an integral maximum flow into unit paths and maps them back to
// base nodes.
Linking extract_linking(const AuxiliaryGraph& aux, const Flow& flow);

// The minimal separator closest to V1.
Separator minimal_left_separator(const Digraph& g,
                                 std::span<const int> sources,
                                 std::span<const int> sinks);

int max_linking_size(const Digraph& g, std::span<const int> sources,
                     std::span<const int> sinks);

// One max-flow run yielding everything the controllability layer needs.
struct LinkingAnalysis {
  AuxiliaryGraph aux;
  Flow flow;
  Linking linking;
  Separator left_separator;
};

LinkingAnalysis analyze_linking(const Digraph& g, std::span<const int> sources,
                                std::span<const int> sinks);

}  // namespace netctrl

#endif  // NETCTRL_FLOW_LINKING_H_
