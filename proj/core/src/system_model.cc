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

#include "netctrl/system_model.h"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "netctrl/errors.h"

namespace netctrl {

std::string StateLabel(int state) { return "x" + std::to_string(state + 1); }
std::string InputLabel(int input) { return "u" + std::to_string(input + 1); }
std::string OutputLabel(int output) { return "y" + std::to_string(output + 1); }

Digraph::Digraph(int num_nodes, std::vector<Edge> edges)
    : num_nodes_(num_nodes), edges_(std::move(edges)) {
  if (num_nodes_ < 0) throw std::invalid_argument("negative node count");
  for (const Edge& e : edges_) {
    if (e.from < 0 || e.from >= num_nodes_ || e.to < 0 || e.to >= num_nodes_)
      throw std::out_of_range("edge endpoint out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  offsets_.assign(num_nodes_ + 1, 0);
  for (const Edge& e : edges_) ++offsets_[e.from + 1];
  for (int v = 0; v < num_nodes_; ++v) offsets_[v + 1] += offsets_[v];
  heads_.reserve(edges_.size());
  // Edges are sorted by (from, to), so heads come out grouped and ascending.
  for (const Edge& e : edges_) heads_.push_back(e.to);
}

std::span<const int> Digraph::successors(int v) const {
  return std::span<const int>(heads_).subspan(offsets_[v],
                                              offsets_[v + 1] - offsets_[v]);
}

bool Digraph::has_edge(int from, int to) const {
  auto succ = successors(from);
  return std::binary_search(succ.begin(), succ.end(), to);
}

std::vector<bool> Digraph::ReachableFrom(std::span<const int> sources) const {
  std::vector<bool> seen(num_nodes_, false);
  std::vector<int> stack;
  for (int s : sources) {
    if (!seen[s]) {
      seen[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : successors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

std::vector<bool> Digraph::CanReach(std::span<const int> sinks) const {
  std::vector<Edge> reversed;
  reversed.reserve(edges_.size());
  for (const Edge& e : edges_) reversed.push_back({e.to, e.from});
  return Digraph(num_nodes_, std::move(reversed)).ReachableFrom(sinks);
}

namespace {

void CheckNodeSet(const std::vector<int>& nodes, int n, const char* what) {
  std::unordered_set<int> seen;
  for (int v : nodes) {
    if (v < 0 || v >= n) {
      throw ValidationError(std::string(what) + ": node index " +
                            std::to_string(v + 1) + " out of range 1.." +
                            std::to_string(n));
    }
    if (!seen.insert(v).second) {
      throw ValidationError(std::string(what) + ": duplicate node " +
                            StateLabel(v));
    }
  }
}

}  // namespace

StructuredSystem::StructuredSystem(int num_states,
                                   std::vector<Edge> state_edges,
                                   std::vector<int> available,
                                   std::vector<int> targets,
                                   std::optional<NodeSets> explicit_inputs,
                                   std::optional<NodeSets> explicit_outputs)
    : num_states_(num_states),
      state_edges_(std::move(state_edges)),
      available_(std::move(available)),
      targets_(std::move(targets)),
      explicit_inputs_(std::move(explicit_inputs)),
      explicit_outputs_(std::move(explicit_outputs)) {
  if (num_states_ <= 0) throw ValidationError("node count must be positive");
  for (const Edge& e : state_edges_) {
    if (e.from < 0 || e.from >= num_states_ || e.to < 0 ||
        e.to >= num_states_) {
      throw ValidationError("edge " + std::to_string(e.from + 1) + " " +
                            std::to_string(e.to + 1) +
                            ": node index out of range 1.." +
                            std::to_string(num_states_));
    }
  }
  std::sort(state_edges_.begin(), state_edges_.end());
  state_edges_.erase(std::unique(state_edges_.begin(), state_edges_.end()),
                     state_edges_.end());
  if (explicit_inputs_ && explicit_inputs_->empty()) explicit_inputs_.reset();
  if (explicit_outputs_ && explicit_outputs_->empty()) explicit_outputs_.reset();
  CheckNodeSet(available_, num_states_, "available");
  CheckNodeSet(targets_, num_states_, "targets");
  if (explicit_inputs_) {
    for (const auto& column : *explicit_inputs_)
      CheckNodeSet(column, num_states_, "input");
  }
  if (explicit_outputs_) {
    for (const auto& row : *explicit_outputs_)
      CheckNodeSet(row, num_states_, "output");
  }
}

const StructuredSystem::NodeSets& StructuredSystem::explicit_inputs() const {
  static const NodeSets kEmpty;
  return explicit_inputs_ ? *explicit_inputs_ : kEmpty;
}

const StructuredSystem::NodeSets& StructuredSystem::explicit_outputs() const {
  static const NodeSets kEmpty;
  return explicit_outputs_ ? *explicit_outputs_ : kEmpty;
}

Digraph StructuredSystem::StateGraph() const {
  return Digraph(num_states_, state_edges_);
}

SystemGraph::SystemGraph(int num_states, int num_inputs, int num_outputs,
                         Digraph graph)
    : num_states_(num_states),
      num_inputs_(num_inputs),
      num_outputs_(num_outputs),
      graph_(std::move(graph)) {
  if (graph_.num_nodes() != num_states + num_inputs + num_outputs)
    throw std::invalid_argument("SystemGraph: node count mismatch");
}

std::vector<int> SystemGraph::input_nodes() const {
  std::vector<int> nodes(num_inputs_);
  for (int k = 0; k < num_inputs_; ++k) nodes[k] = input_node(k);
  return nodes;
}

std::vector<int> SystemGraph::output_nodes() const {
  std::vector<int> nodes(num_outputs_);
  for (int k = 0; k < num_outputs_; ++k) nodes[k] = output_node(k);
  return nodes;
}

NodeKind SystemGraph::kind(int node) const {
  if (node < num_states_) return NodeKind::kState;
  if (node < num_states_ + num_inputs_) return NodeKind::kInput;
  return NodeKind::kOutput;
}

std::string SystemGraph::label(int node) const {
  switch (kind(node)) {
    case NodeKind::kState:
      return StateLabel(node);
    case NodeKind::kInput:
      return InputLabel(node - num_states_);
    case NodeKind::kOutput:
      return OutputLabel(node - num_states_ - num_inputs_);
  }
  return {};
}

namespace {

SystemGraph GraphFor(const StructuredSystem& sys,
                     const StructuredSystem::NodeSets& inputs,
                     const StructuredSystem::NodeSets& outputs) {
  const int n = sys.num_states();
  const int m = static_cast<int>(inputs.size());
  const int p = static_cast<int>(outputs.size());
  std::vector<Edge> edges = sys.state_edges();
  for (int k = 0; k < m; ++k) {
    for (int j : inputs[k]) edges.push_back({n + k, j});
  }
  for (int k = 0; k < p; ++k) {
    for (int j : outputs[k]) edges.push_back({j, n + m + k});
  }
  return SystemGraph(n, m, p, Digraph(n + m + p, std::move(edges)));
}

StructuredSystem::NodeSets Singletons(const std::vector<int>& nodes) {
  StructuredSystem::NodeSets sets;
  sets.reserve(nodes.size());
  for (int v : nodes) sets.push_back({v});
  return sets;
}

}  // namespace

SystemGraph build_graph(const StructuredSystem& sys) {
  return GraphFor(sys, sys.explicit_inputs(), sys.explicit_outputs());
}

SystemGraph build_io_graph(const StructuredSystem& sys) {
  return GraphFor(sys,
                  sys.has_explicit_inputs() ? sys.explicit_inputs()
                                            : Singletons(sys.available()),
                  sys.has_explicit_outputs() ? sys.explicit_outputs()
                                             : Singletons(sys.targets()));
}

}  // namespace netctrl
