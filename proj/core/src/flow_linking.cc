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

#include "netctrl/flow_linking.h"

#include <algorithm>
#include <limits>
#include <string>

#include "netctrl/errors.h"

namespace netctrl {
namespace {

std::vector<bool> Membership(std::span<const int> nodes, int n,
                             const char* what) {
  std::vector<bool> mask(n, false);
  for (int v : nodes) {
    if (v < 0 || v >= n) {
      throw PreconditionError(std::string(what) + ": node " +
                              std::to_string(v) + " not in graph");
    }
    mask[v] = true;
  }
  return mask;
}

// Residual network over an AuxiliaryGraph. Arcs leaving a node are ordered by
// head index, so a breadth-first search discovers nodes in ascending order
// within each layer.
class ResidualNetwork {
 public:
  ResidualNetwork(const AuxiliaryGraph& aux, const std::vector<int>& flow)
      : num_nodes_(aux.num_nodes()),
        source_(aux.source()),
        sink_(aux.sink()) {
    const std::size_t m = aux.arcs.size();
    struct Entry {
      int tail;
      int head;
      int residual;
      int arc;
      bool forward;
    };
    std::vector<Entry> entries;
    entries.reserve(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
      const auto& a = aux.arcs[i];
      const int f = flow[i];
      entries.push_back({a.tail, a.head, a.capacity - f, static_cast<int>(i),
                         true});
      entries.push_back({a.head, a.tail, f, static_cast<int>(i), false});
    }

    offsets_.assign(num_nodes_ + 1, 0);
    for (const Entry& e : entries) ++offsets_[e.tail + 1];
    for (int v = 0; v < num_nodes_; ++v) offsets_[v + 1] += offsets_[v];
    std::vector<int> order(entries.size());
    {
      std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
      for (std::size_t k = 0; k < entries.size(); ++k)
        order[fill[entries[k].tail]++] = static_cast<int>(k);
    }
    for (int v = 0; v < num_nodes_; ++v) {
      std::sort(order.begin() + offsets_[v], order.begin() + offsets_[v + 1],
                [&](int x, int y) {
                  const Entry& a = entries[x];
                  const Entry& b = entries[y];
                  if (a.head != b.head) return a.head < b.head;
                  if (a.arc != b.arc) return a.arc < b.arc;
                  return a.forward && !b.forward;
                });
    }

    arcs_.resize(entries.size());
    forward_pos_.assign(m, -1);
    reverse_pos_.assign(m, -1);
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      const Entry& e = entries[order[pos]];
      arcs_[pos] = {e.head, e.residual, -1};
      (e.forward ? forward_pos_ : reverse_pos_)[e.arc] = static_cast<int>(pos);
    }
    for (std::size_t i = 0; i < m; ++i) {
      arcs_[forward_pos_[i]].rev = reverse_pos_[i];
      arcs_[reverse_pos_[i]].rev = forward_pos_[i];
    }
  }

  // Breadth-first search from the source over arcs with positive residual.
  // Stops early once the sink is labelled when `stop_at_sink`.
  std::vector<int> Label(bool stop_at_sink) {
    parent_.assign(num_nodes_, -1);
    std::vector<bool> seen(num_nodes_, false);
    std::vector<int> queue;
    queue.reserve(num_nodes_);
    seen[source_] = true;
    queue.push_back(source_);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int pos = offsets_[v]; pos < offsets_[v + 1]; ++pos) {
        const ResArc& a = arcs_[pos];
        if (a.residual <= 0 || seen[a.head]) continue;
        seen[a.head] = true;
        parent_[a.head] = pos;
        queue.push_back(a.head);
        if (stop_at_sink && a.head == sink_) return queue;
      }
    }
    return queue;
  }

  bool SinkLabelled() const { return parent_[sink_] != -1; }

  // Pushes the bottleneck along the parent chain of the last Label() call.
  int Augment() {
    int bottleneck = std::numeric_limits<int>::max();
    for (int v = sink_; v != source_;) {
      const ResArc& a = arcs_[parent_[v]];
      bottleneck = std::min(bottleneck, a.residual);
      v = arcs_[a.rev].head;
    }
    for (int v = sink_; v != source_;) {
      ResArc& a = arcs_[parent_[v]];
      a.residual -= bottleneck;
      arcs_[a.rev].residual += bottleneck;
      v = arcs_[a.rev].head;
    }
    return bottleneck;
  }

  int FlowOn(int arc) const { return arcs_[reverse_pos_[arc]].residual; }

 private:
  struct ResArc {
    int head;
    int residual;
    int rev;
  };

  int num_nodes_;
  int source_;
  int sink_;
  std::vector<int> offsets_;
  std::vector<ResArc> arcs_;
  std::vector<int> forward_pos_;
  std::vector<int> reverse_pos_;
  std::vector<int> parent_;
};

void CheckFlowShape(const AuxiliaryGraph& aux, const Flow& flow) {
  if (flow.on_arc.size() != aux.arcs.size())
    throw PreconditionError("flow does not match auxiliary graph");
  for (std::size_t i = 0; i < aux.arcs.size(); ++i) {
    if (flow.on_arc[i] < 0 || flow.on_arc[i] > aux.arcs[i].capacity)
      throw PreconditionError("flow is not feasible");
  }
}

}  // namespace

int AuxiliaryGraph::BaseNode(int aux_node) const {
  if (aux_node <= 0 || aux_node >= sink()) return -1;
  return (aux_node - 1) / 2;
}

std::string AuxiliaryGraph::NodeLabel(int aux_node) const {
  if (aux_node == source()) return "s";
  if (aux_node == sink()) return "t";
  const int v = BaseNode(aux_node);
  return StateLabel(v) + (aux_node == MinusNode(v) ? "-" : "+");
}

std::vector<int> Linking::StartNodes() const {
  std::vector<int> starts;
  starts.reserve(paths.size());
  for (const Path& p : paths) starts.push_back(p.front());
  return starts;
}

Digraph preprocess_direct(const Digraph& g, std::span<const int> sources,
                          std::span<const int> sinks) {
  const auto in_sources = Membership(sources, g.num_nodes(), "sources");
  const auto in_sinks = Membership(sinks, g.num_nodes(), "sinks");
  std::vector<Edge> kept;
  kept.reserve(g.num_edges());
  for (const Edge& e : g.edges()) {
    if (in_sources[e.to] || in_sinks[e.from]) continue;
    kept.push_back(e);
  }
  return Digraph(g.num_nodes(), std::move(kept));
}

AuxiliaryGraph build_auxiliary_graph(const Digraph& g,
                                     std::span<const int> sources,
                                     std::span<const int> sinks) {
  const int n = g.num_nodes();
  const auto in_sources = Membership(sources, n, "sources");
  const auto in_sinks = Membership(sinks, n, "sinks");
  const int num_sinks =
      static_cast<int>(std::count(in_sinks.begin(), in_sinks.end(), true));

  AuxiliaryGraph aux;
  aux.num_base_nodes = n;
  aux.infinite_capacity = num_sinks + 1;
  const int inf = aux.infinite_capacity;
  aux.arcs.reserve(n + g.num_edges() + sources.size() + sinks.size());
  for (int v = 0; v < n; ++v)
    aux.arcs.push_back({AuxiliaryGraph::MinusNode(v),
                        AuxiliaryGraph::PlusNode(v), 1});
  for (const Edge& e : g.edges()) {
    if (in_sources[e.to] || in_sinks[e.from]) continue;  // see preprocess_direct
    aux.arcs.push_back({AuxiliaryGraph::PlusNode(e.from),
                        AuxiliaryGraph::MinusNode(e.to), inf});
  }
  for (int v = 0; v < n; ++v) {
    if (in_sources[v])
      aux.arcs.push_back({aux.source(), AuxiliaryGraph::MinusNode(v), inf});
  }
  for (int v = 0; v < n; ++v) {
    if (in_sinks[v])
      aux.arcs.push_back({AuxiliaryGraph::PlusNode(v), aux.sink(), inf});
  }
  return aux;
}

Flow max_flow(const AuxiliaryGraph& aux) {
  ResidualNetwork residual(aux, std::vector<int>(aux.arcs.size(), 0));
  Flow flow;
  while (true) {
    residual.Label(/*stop_at_sink=*/true);
    if (!residual.SinkLabelled()) break;
    flow.value += residual.Augment();
  }
  flow.on_arc.resize(aux.arcs.size());
  for (std::size_t i = 0; i < aux.arcs.size(); ++i)
    flow.on_arc[i] = residual.FlowOn(static_cast<int>(i));
  return flow;
}

std::vector<int> min_cut_source_set(const AuxiliaryGraph& aux,
                                    const Flow& flow) {
  CheckFlowShape(aux, flow);
  ResidualNetwork residual(aux, flow.on_arc);
  std::vector<int> labelled = residual.Label(/*stop_at_sink=*/false);
  if (residual.SinkLabelled())
    throw PreconditionError("flow is not maximum: an augmenting path exists");
  std::sort(labelled.begin(), labelled.end());
  return labelled;
}

Linking extract_linking(const AuxiliaryGraph& aux, const Flow& flow) {
  CheckFlowShape(aux, flow);
  const int num_nodes = aux.num_nodes();
  std::vector<int> remaining = flow.on_arc;

  // Outgoing arcs with flow, grouped by tail and ordered by head.
  std::vector<int> offsets(num_nodes + 1, 0);
  for (std::size_t i = 0; i < aux.arcs.size(); ++i)
    if (remaining[i] > 0) ++offsets[aux.arcs[i].tail + 1];
  for (int v = 0; v < num_nodes; ++v) offsets[v + 1] += offsets[v];
  std::vector<int> out(offsets.back());
  {
    std::vector<int> fill(offsets.begin(), offsets.end() - 1);
    for (std::size_t i = 0; i < aux.arcs.size(); ++i)
      if (remaining[i] > 0) out[fill[aux.arcs[i].tail]++] = static_cast<int>(i);
  }
  for (int v = 0; v < num_nodes; ++v) {
    std::stable_sort(out.begin() + offsets[v], out.begin() + offsets[v + 1],
                     [&](int a, int b) {
                       return aux.arcs[a].head < aux.arcs[b].head;
                     });
  }
  std::vector<int> cursor(offsets.begin(), offsets.end() - 1);
  auto next_arc = [&](int v) {
    while (cursor[v] < offsets[v + 1] && remaining[out[cursor[v]]] == 0)
      ++cursor[v];
    return cursor[v] < offsets[v + 1] ? out[cursor[v]] : -1;
  };

  Linking linking;
  std::vector<int> position(num_nodes, -1);
  for (int unit = 0; unit < flow.value; ++unit) {
    std::vector<int> nodes{aux.source()};
    std::vector<int> arcs;
    position[aux.source()] = 0;
    while (nodes.back() != aux.sink()) {
      const int arc = next_arc(nodes.back());
      if (arc < 0) throw PreconditionError("flow violates conservation");
      const int head = aux.arcs[arc].head;
      if (position[head] >= 0) {
        // Circulation: cancel it and resume from `head`.
        for (std::size_t k = position[head]; k < arcs.size(); ++k)
          --remaining[arcs[k]];
        --remaining[arc];
        for (std::size_t k = position[head] + 1; k < nodes.size(); ++k)
          position[nodes[k]] = -1;
        nodes.resize(position[head] + 1);
        arcs.resize(position[head]);
        continue;
      }
      position[head] = static_cast<int>(nodes.size());
      nodes.push_back(head);
      arcs.push_back(arc);
    }
    for (int arc : arcs) --remaining[arc];
    for (int v : nodes) position[v] = -1;

    Path path;
    for (int v : nodes) {
      if (v != aux.source() && v != aux.sink() &&
          v == AuxiliaryGraph::MinusNode(aux.BaseNode(v)))
        path.push_back(aux.BaseNode(v));
    }
    linking.paths.push_back(std::move(path));
  }
  return linking;
}

LinkingAnalysis analyze_linking(const Digraph& g, std::span<const int> sources,
                                std::span<const int> sinks) {
  LinkingAnalysis result;
  result.aux = build_auxiliary_graph(g, sources, sinks);
  result.flow = max_flow(result.aux);
  const std::vector<int> labelled =
      min_cut_source_set(result.aux, result.flow);
  std::vector<bool> in_source_set(result.aux.num_nodes(), false);
  for (int v : labelled) in_source_set[v] = true;
  for (int v = 0; v < g.num_nodes(); ++v) {
    if (in_source_set[AuxiliaryGraph::MinusNode(v)] &&
        !in_source_set[AuxiliaryGraph::PlusNode(v)])
      result.left_separator.nodes.push_back(v);
  }
  result.linking = extract_linking(result.aux, result.flow);
  return result;
}

Separator minimal_left_separator(const Digraph& g,
                                 std::span<const int> sources,
                                 std::span<const int> sinks) {
  return analyze_linking(g, sources, sinks).left_separator;
}

int max_linking_size(const Digraph& g, std::span<const int> sources,
                     std::span<const int> sinks) {
  return max_flow(build_auxiliary_graph(g, sources, sinks)).value;
}

}  // namespace netctrl
