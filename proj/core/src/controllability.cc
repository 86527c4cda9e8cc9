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

#include "netctrl/controllability.h"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

#include "netctrl/errors.h"

namespace netctrl {
namespace {

int DistinctCount(std::span<const int> nodes) {
  std::vector<int> copy(nodes.begin(), nodes.end());
  std::sort(copy.begin(), copy.end());
  return static_cast<int>(std::unique(copy.begin(), copy.end()) -
                          copy.begin());
}

ControllabilityVerdict Verdict(const Digraph& g, std::span<const int> sources,
                               std::span<const int> sinks) {
  const Digraph direct = preprocess_direct(g, sources, sinks);
  const AuxiliaryGraph aux = build_auxiliary_graph(direct, sources, sinks);
  const Flow flow = max_flow(aux);
  ControllabilityVerdict v;
  v.max_linking = flow.value;
  v.required = DistinctCount(sinks);
  v.controllable = v.max_linking == v.required;
  v.witness = extract_linking(aux, flow);
  return v;
}

// Maximum bipartite matching (Hopcroft-Karp). `adj[r]` lists the columns
// adjacent to row r. Returns the matched column of every row, or -1.
std::vector<int> MaximumMatching(const std::vector<std::vector<int>>& adj,
                                 int num_columns) {
  const int rows = static_cast<int>(adj.size());
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> row_match(rows, -1), col_match(num_columns, -1);
  std::vector<int> dist(rows);

  auto bfs = [&] {
    std::queue<int> q;
    bool found = false;
    for (int r = 0; r < rows; ++r) {
      if (row_match[r] < 0) {
        dist[r] = 0;
        q.push(r);
      } else {
        dist[r] = kInf;
      }
    }
    while (!q.empty()) {
      int r = q.front();
      q.pop();
      for (int c : adj[r]) {
        int next = col_match[c];
        if (next < 0) {
          found = true;
        } else if (dist[next] == kInf) {
          dist[next] = dist[r] + 1;
          q.push(next);
        }
      }
    }
    return found;
  };

  // Iterative DFS along the layered graph.
  std::vector<std::size_t> it(rows);
  auto dfs = [&](int root) {
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int r = stack.back();
      if (it[r] == adj[r].size()) {
        dist[r] = kInf;
        stack.pop_back();
        continue;
      }
      int c = adj[r][it[r]];
      int next = col_match[c];
      if (next < 0) {
        // Flip the alternating path held on the stack.
        for (std::size_t k = stack.size(); k-- > 0;) {
          int row = stack[k];
          int col = adj[row][it[row]];
          row_match[row] = col;
          col_match[col] = row;
        }
        return true;
      }
      if (dist[next] == dist[r] + 1) {
        stack.push_back(next);
      } else {
        ++it[r];
      }
    }
    return false;
  };

  while (bfs()) {
    std::fill(it.begin(), it.end(), 0);
    for (int r = 0; r < rows; ++r) {
      if (row_match[r] < 0) dfs(r);
    }
  }
  return row_match;
}

}  // namespace

std::string_view to_string(NodeClass c) {
  switch (c) {
    case NodeClass::kEssential:
      return "essential";
    case NodeClass::kUseful:
      return "useful";
    case NodeClass::kUseless:
      return "useless";
  }
  return "unknown";
}

NodeClass NodeClassification::at(int node) const {
  for (const auto& [v, c] : labels) {
    if (v == node) return c;
  }
  throw std::out_of_range(StateLabel(node) + " is not an available node");
}

ControllabilityVerdict is_functional_target_controllable(
    const StructuredSystem& sys, std::span<const int> steering,
    std::span<const int> targets) {
  return Verdict(sys.StateGraph(), steering, targets);
}

ControllabilityVerdict is_functional_output_controllable(
    const StructuredSystem& sys) {
  if (!sys.has_explicit_inputs() || !sys.has_explicit_outputs())
    throw PreconditionError(
        "functional output controllability needs explicit inputs and outputs");
  const SystemGraph g = build_graph(sys);
  const auto inputs = g.input_nodes();
  const auto outputs = g.output_nodes();
  return Verdict(g.graph(), inputs, outputs);
}

std::variant<MtcpSolution, Unsolvable> solve_mtcp(const StructuredSystem& sys,
                                                  MtcpTieBreak tie_break) {
  if (sys.targets().empty())
    throw PreconditionError("MTCP needs a nonempty target set");
  const Digraph g = sys.StateGraph();
  const int p = static_cast<int>(sys.targets().size());
  ControllabilityVerdict full = Verdict(g, sys.available(), sys.targets());
  if (!full.controllable) return Unsolvable{full.max_linking, p};

  if (tie_break == MtcpTieBreak::kFlowOrder) {
    MtcpSolution solution;
    solution.steering = full.witness.StartNodes();
    solution.witness = std::move(full.witness);
    return solution;
  }

  // Start sets of size-p linkings are the bases of a gammoid, so the greedy
  // scan in index order yields the lexicographically smallest one.
  std::vector<int> candidates = sys.available();
  std::sort(candidates.begin(), candidates.end());
  std::vector<int> chosen;
  for (int a : candidates) {
    if (static_cast<int>(chosen.size()) == p) break;
    chosen.push_back(a);
    if (max_linking_size(g, chosen, sys.targets()) !=
        static_cast<int>(chosen.size()))
      chosen.pop_back();
  }
  MtcpSolution solution;
  solution.witness = Verdict(g, chosen, sys.targets()).witness;
  std::sort(solution.witness.paths.begin(), solution.witness.paths.end(),
            [](const Path& a, const Path& b) { return a.front() < b.front(); });
  solution.steering = solution.witness.StartNodes();
  return solution;
}

NodeClassification classify_nodes(const StructuredSystem& sys) {
  const Digraph g = sys.StateGraph();
  const auto& available = sys.available();
  const auto& targets = sys.targets();
  const int p = static_cast<int>(targets.size());

  const LinkingAnalysis analysis = analyze_linking(g, available, targets);
  if (analysis.flow.value < p) throw UnsolvableError(analysis.flow.value, p);

  std::vector<bool> in_separator(g.num_nodes(), false);
  for (int v : analysis.left_separator.nodes) in_separator[v] = true;
  // Reachability in the unpruned graph: a route through another available
  // node still counts, since an admissible set may leave that node out.
  const std::vector<bool> reaches_target = g.CanReach(targets);

  NodeClassification result;
  result.labels.reserve(available.size());
  std::vector<int> others;
  for (int a : available) {
    NodeClass label = NodeClass::kUseful;
    bool essential = false;
    if (in_separator[a]) {
      // A separator node can still be bypassed when another available node
      // feeds into it; confirm that dropping it breaks solvability.
      others.clear();
      for (int b : available)
        if (b != a) others.push_back(b);
      essential = max_linking_size(g, others, targets) < p;
    }
    if (essential) {
      label = NodeClass::kEssential;
    } else if (!reaches_target[a]) {
      label = NodeClass::kUseless;
    }
    result.labels.emplace_back(a, label);
  }
  return result;
}

StructuralDiagnostics is_structurally_controllable(const StructuredSystem& sys) {
  if (!sys.has_explicit_inputs())
    throw PreconditionError("structural controllability needs explicit inputs");
  const SystemGraph sg = build_graph(sys);
  const Digraph& g = sg.graph();
  const int n = sys.num_states();
  const int m = sg.num_inputs();

  StructuralDiagnostics d;
  d.num_states = n;
  const std::vector<bool> reached = g.ReachableFrom(sg.input_nodes());
  for (int v = 0; v < n; ++v)
    if (!reached[v]) d.unreachable.push_back(v);
  d.input_connected = d.unreachable.empty();

  // Row j of [A B] has a nonzero in column c iff c -> x_j in G(Sigma); state
  // columns are 0..n-1 and input columns n..n+m-1, matching SystemGraph ids.
  std::vector<std::vector<int>> rows(n);
  for (const Edge& e : g.edges()) {
    if (e.to < n && e.from < n + m) rows[e.to].push_back(e.from);
  }
  const std::vector<int> match = MaximumMatching(rows, n + m);
  std::vector<int> successor(n + m, -1);
  for (int j = 0; j < n; ++j) {
    if (match[j] >= 0) {
      ++d.generic_rank;
      successor[match[j]] = j;
    } else {
      d.unmatched.push_back(j);
    }
  }
  d.controllable = d.input_connected && d.generic_rank == n;

  // The matching assigns each state at most one predecessor and one
  // successor: chains rooted at inputs are stems, closed chains are cycles.
  std::vector<bool> covered(n, false);
  for (int k = 0; k < m; ++k) {
    const int u = n + k;
    if (successor[u] < 0) continue;
    Path stem{u};
    for (int v = successor[u]; v >= 0 && !covered[v]; v = successor[v]) {
      covered[v] = true;
      stem.push_back(v);
    }
    d.stems.push_back(std::move(stem));
  }
  for (int j : d.unmatched) {
    for (int v = j; v >= 0 && !covered[v]; v = successor[v]) covered[v] = true;
  }
  for (int start = 0; start < n; ++start) {
    if (covered[start] || match[start] < 0) continue;
    Path cycle;
    for (int v = start; !covered[v]; v = successor[v]) {
      covered[v] = true;
      cycle.push_back(v);
    }
    d.cycles.push_back(std::move(cycle));
  }
  return d;
}

}  // namespace netctrl
