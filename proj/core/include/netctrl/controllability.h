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

#ifndef NETCTRL_CONTROLLABILITY_H_
#define NETCTRL_CONTROLLABILITY_H_

#include <span>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "netctrl/flow_linking.h"
#include "netctrl/system_model.h"

namespace netctrl {

// Result of a functional controllability test. `witness` is a maximum
// linking; when `controllable`, its size equals `required`.
struct ControllabilityVerdict {
  bool controllable = false;
  int max_linking = 0;
  int required = 0;
  Linking witness;
};

// Steering nodes `steering` (state indices) each get a dedicated input;
// targets `targets` each get a dedicated output. True iff the maximum
// (steering-targets)-linking has size |targets|.
ControllabilityVerdict is_functional_target_controllable(
    const StructuredSystem& sys, std::span<const int> steering,
    std::span<const int> targets);

// Same test on G(Sigma) for the explicit input/output patterns; witness
// paths use SystemGraph node ids. Throws PreconditionError when the system
// has no explicit inputs or outputs.
ControllabilityVerdict is_functional_output_controllable(
    const StructuredSystem& sys);

struct MtcpSolution {
  std::vector<int> steering;  // start nodes of `witness`, in path order
  Linking witness;
};

struct Unsolvable {
  int achieved = 0;
  int required = 0;
};

enum class MtcpTieBreak {
  kFlowOrder,      // start nodes of the canonical BFS max flow
  kSmallestIndex,  // lexicographically smallest admissible start set
};

// Minimal Target Controllability Problem over sys.available() and
// sys.targets(). Throws PreconditionError when there are no targets.
std::variant<MtcpSolution, Unsolvable> solve_mtcp(
    const StructuredSystem& sys,
    MtcpTieBreak tie_break = MtcpTieBreak::kFlowOrder);

enum class NodeClass { kEssential, kUseful, kUseless };

std::string_view to_string(NodeClass c);

struct NodeClassification {
  // One entry per available node, in the order of sys.available().
  std::vector<std::pair<int, NodeClass>> labels;

  // Throws std::out_of_range for nodes outside the available set.
  NodeClass at(int node) const;
};

// Throws UnsolvableError when no size-p (A-T)-linking exists.
NodeClassification classify_nodes(const StructuredSystem& sys);

// Point-wise (Kalman) structural controllability over the explicit inputs.
// Node ids in `unreachable`, `unmatched`, `stems`, and `cycles` are
// SystemGraph ids; stems start at an input node.
struct StructuralDiagnostics {
  bool controllable = false;
  bool input_connected = false;
  int generic_rank = 0;  // generic rank of [A B]
  int num_states = 0;
  std::vector<int> unreachable;
  std::vector<int> unmatched;
  std::vector<Path> stems;
  std::vector<Path> cycles;
};

// Throws PreconditionError when the system has no explicit inputs.
StructuralDiagnostics is_structurally_controllable(const StructuredSystem& sys);

}  // namespace netctrl

#endif  // NETCTRL_CONTROLLABILITY_H_
