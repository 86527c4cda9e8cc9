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

#include "netctrl/dot.h"

#include <sstream>
#include <vector>

namespace netctrl {
namespace {

const char* FillColor(NodeClass c) {
  switch (c) {
    case NodeClass::kEssential:
      return "#d62728";
    case NodeClass::kUseful:
      return "#2ca02c";
    case NodeClass::kUseless:
      return "#c7c7c7";
  }
  return "white";
}

}  // namespace

std::string serialize_dot(
    const SystemGraph& g,
    const std::optional<NodeClassification>& classification) {
  std::vector<const NodeClass*> label_of(g.num_states(), nullptr);
  if (classification) {
    for (const auto& [v, c] : classification->labels)
      if (v >= 0 && v < g.num_states()) label_of[v] = &c;
  }

  std::ostringstream out;
  out << "digraph G {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle];\n";
  for (int v = 0; v < g.num_nodes(); ++v) {
    out << "  " << g.label(v);
    switch (g.kind(v)) {
      case NodeKind::kInput:
        out << " [shape=box]";
        break;
      case NodeKind::kOutput:
        out << " [shape=diamond]";
        break;
      case NodeKind::kState:
        if (const NodeClass* c = label_of[v]) {
          out << " [class=\"" << to_string(*c) << "\", style=filled, "
              << "fillcolor=\"" << FillColor(*c) << "\"";
          if (*c == NodeClass::kEssential) out << ", penwidth=3";
          out << "]";
        }
        break;
    }
    out << ";\n";
  }
  for (const Edge& e : g.graph().edges())
    out << "  " << g.label(e.from) << " -> " << g.label(e.to) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace netctrl
