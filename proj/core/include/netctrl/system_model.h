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

#ifndef NETCTRL_SYSTEM_MODEL_H_
#define NETCTRL_SYSTEM_MODEL_H_

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace netctrl {

// Node indices are 0-based everywhere in the library. Files and reports use
// 1-based labels (x1..xn, u1..um, y1..yp); see StateLabel() and friends.

struct Edge {
  int from = 0;
  int to = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string StateLabel(int state);
std::string InputLabel(int input);
std::string OutputLabel(int output);

// Immutable directed graph with sorted, de-duplicated edges and CSR
// adjacency. Successor lists are in ascending node order.
class Digraph {
 public:
  Digraph() = default;
  Digraph(int num_nodes, std::vector<Edge> edges);

  int num_nodes() const { return num_nodes_; }
  std::size_t num_edges() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const int> successors(int v) const;
  bool has_edge(int from, int to) const;

  // Membership mask of nodes reachable from `sources` (sources included).
  std::vector<bool> ReachableFrom(std::span<const int> sources) const;
  // Membership mask of nodes from which some node of `sinks` is reachable.
  std::vector<bool> CanReach(std::span<const int> sinks) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  int num_nodes_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_;
  std::vector<int> heads_;
};

// Zero/nonzero pattern of (A, B, C) together with the available set and the
// target set. An edge i->j stands for the nonzero entry a_ji.
class StructuredSystem {
 public:
  using NodeSets = std::vector<std::vector<int>>;

  // Throws ValidationError on out-of-range indices, duplicate members of
  // `available`, `targets`, or of a single input column / output row.
  // Parallel edges are collapsed.
  StructuredSystem(int num_states, std::vector<Edge> state_edges,
                   std::vector<int> available, std::vector<int> targets,
                   std::optional<NodeSets> explicit_inputs = std::nullopt,
                   std::optional<NodeSets> explicit_outputs = std::nullopt);

  int num_states() const { return num_states_; }
  const std::vector<Edge>& state_edges() const { return state_edges_; }
  const std::vector<int>& available() const { return available_; }
  const std::vector<int>& targets() const { return targets_; }

  bool has_explicit_inputs() const { return explicit_inputs_.has_value(); }
  bool has_explicit_outputs() const { return explicit_outputs_.has_value(); }
  // Empty when absent.
  const NodeSets& explicit_inputs() const;
  const NodeSets& explicit_outputs() const;

  // G(A): the state-only graph.
  Digraph StateGraph() const;

  friend bool operator==(const StructuredSystem&,
                         const StructuredSystem&) = default;

 private:
  int num_states_;
  std::vector<Edge> state_edges_;
  std::vector<int> available_;
  std::vector<int> targets_;
  std::optional<NodeSets> explicit_inputs_;
  std::optional<NodeSets> explicit_outputs_;
};

enum class NodeKind { kState, kInput, kOutput };

// G(Sigma): states occupy ids [0, n), inputs [n, n + m), outputs
// [n + m, n + m + p). Input nodes have no incoming edges and output nodes no
// outgoing edges.
class SystemGraph {
 public:
  SystemGraph() = default;
  SystemGraph(int num_states, int num_inputs, int num_outputs, Digraph graph);

  int num_states() const { return num_states_; }
  int num_inputs() const { return num_inputs_; }
  int num_outputs() const { return num_outputs_; }
  int num_nodes() const { return graph_.num_nodes(); }
  const Digraph& graph() const { return graph_; }

  int input_node(int k) const { return num_states_ + k; }
  int output_node(int k) const { return num_states_ + num_inputs_ + k; }
  std::vector<int> input_nodes() const;
  std::vector<int> output_nodes() const;

  NodeKind kind(int node) const;
  std::string label(int node) const;

 private:
  int num_states_ = 0;
  int num_inputs_ = 0;
  int num_outputs_ = 0;
  Digraph graph_;
};

SystemGraph build_graph(const StructuredSystem& sys);

// G(Sigma) with the explicit input (output) pattern when present, otherwise
// one dedicated input per available node (one output per target node).
SystemGraph build_io_graph(const StructuredSystem& sys);

// Text or JSON (detected by a leading '{'). Throws SyntaxError or
// ValidationError.
StructuredSystem parse_system(std::string_view text);
StructuredSystem load_system(const std::string& path);

// Canonical line-oriented form; parse_system(serialize_system(s)) == s.
std::string serialize_system(const StructuredSystem& sys);
std::string serialize_system_json(const StructuredSystem& sys);

}  // namespace netctrl

#endif  // NETCTRL_SYSTEM_MODEL_H_
