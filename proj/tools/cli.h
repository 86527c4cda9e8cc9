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

#ifndef NETCTRL_TOOLS_CLI_H_
#define NETCTRL_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace netctrl::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,  // not controllable / unsolvable / disagreement
  kUsage = 2,     // bad arguments, unreadable or invalid input
};

// Runs one netctrl invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace netctrl::cli

#endif  // NETCTRL_TOOLS_CLI_H_
