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

#ifndef NETCTRL_REPORT_H_
#define NETCTRL_REPORT_H_

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "netctrl/controllability.h"
#include "netctrl/flow_linking.h"
#include "netctrl/numeric_oracle.h"

// JSON views of results. Node ids are rendered with 1-based labels.
namespace netctrl {

using Json = nlohmann::ordered_json;
using NodeLabeler = std::function<std::string(int)>;

Json linking_to_json(const Linking& linking, const NodeLabeler& label);
Json nodes_to_json(const std::vector<int>& nodes, const NodeLabeler& label);

// {"value": F, "arcs": [{"from": "x1+", "to": "x6-", "flow": 1}, ...]}
// listing arcs with nonzero flow.
Json flow_to_json(const AuxiliaryGraph& aux, const Flow& flow);

Json classification_to_json(const NodeClassification& c);
Json verdict_to_json(const ControllabilityVerdict& v, const NodeLabeler& label);
Json structural_to_json(const StructuralDiagnostics& d, const SystemGraph& g);
Json trial_to_json(const VerificationTrial& trial);

}  // namespace netctrl

#endif  // NETCTRL_REPORT_H_
