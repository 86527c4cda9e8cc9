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

#include "netctrl/report.h"

namespace netctrl {

Json nodes_to_json(const std::vector<int>& nodes, const NodeLabeler& label) {
  Json arr = Json::array();
  for (int v : nodes) arr.push_back(label(v));
  return arr;
}

Json linking_to_json(const Linking& linking, const NodeLabeler& label) {
  Json paths = Json::array();
  for (const Path& p : linking.paths) paths.push_back(nodes_to_json(p, label));
  return paths;
}

Json flow_to_json(const AuxiliaryGraph& aux, const Flow& flow) {
  Json arcs = Json::array();
  for (std::size_t i = 0; i < aux.arcs.size() && i < flow.on_arc.size(); ++i) {
    if (flow.on_arc[i] == 0) continue;
    arcs.push_back({{"from", aux.NodeLabel(aux.arcs[i].tail)},
                    {"to", aux.NodeLabel(aux.arcs[i].head)},
                    {"flow", flow.on_arc[i]}});
  }
  Json j;
  j["value"] = flow.value;
  j["arcs"] = std::move(arcs);
  return j;
}

Json classification_to_json(const NodeClassification& c) {
  Json j = Json::object();
  for (const auto& [v, label] : c.labels)
    j[StateLabel(v)] = std::string(to_string(label));
  return j;
}

Json verdict_to_json(const ControllabilityVerdict& v,
                     const NodeLabeler& label) {
  Json j;
  j["controllable"] = v.controllable;
  j["max_linking"] = v.max_linking;
  j["required"] = v.required;
  j["witness_paths"] = linking_to_json(v.witness, label);
  return j;
}

Json structural_to_json(const StructuralDiagnostics& d, const SystemGraph& g) {
  const NodeLabeler label = [&g](int v) { return g.label(v); };
  Json cover;
  cover["stems"] = Json::array();
  for (const Path& p : d.stems) cover["stems"].push_back(nodes_to_json(p, label));
  cover["cycles"] = Json::array();
  for (const Path& p : d.cycles)
    cover["cycles"].push_back(nodes_to_json(p, label));

  Json j;
  j["controllable"] = d.controllable;
  j["reachable"] = d.input_connected;
  j["generic_rank"] = d.generic_rank;
  j["num_states"] = d.num_states;
  j["unreachable"] = nodes_to_json(d.unreachable, label);
  j["unmatched"] = nodes_to_json(d.unmatched, label);
  j["cover"] = std::move(cover);
  return j;
}

Json trial_to_json(const VerificationTrial& trial) {
  Json j;
  j["seed"] = trial.seed;
  j["structural_rank"] = trial.structural_rank;
  j["transfer_rank"] = trial.transfer_rank;
  j["pointwise_rank"] = trial.pointwise_rank;
  j["agree"] = trial.agree;
  return j;
}

}  // namespace netctrl
