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

#ifndef NETCTRL_DOT_H_
#define NETCTRL_DOT_H_

#include <optional>
#include <string>

#include "netctrl/controllability.h"
#include "netctrl/system_model.h"

namespace netctrl {

// Graphviz digraph. Inputs are boxes, outputs diamonds; classified available
// nodes carry a `class` attribute plus a distinct fill colour.
std::string serialize_dot(
    const SystemGraph& g,
    const std::optional<NodeClassification>& classification = std::nullopt);

}  // namespace netctrl

#endif  // NETCTRL_DOT_H_
