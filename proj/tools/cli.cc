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

#include "cli.h"

#include <CLI11.hpp>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "netctrl/controllability.h"
#include "netctrl/dot.h"
#include "netctrl/errors.h"
#include "netctrl/flow_linking.h"
#include "netctrl/numeric_oracle.h"
#include "netctrl/report.h"
#include "netctrl/system_model.h"
#include "netctrl/trajectory.h"

namespace netctrl::cli {
namespace {

struct Options {
  std::string file;
  bool json = false;
  std::vector<int> steering;
  std::vector<int> targets;
  bool prefer_low_index = false;
  std::uint64_t seed = 0;
  int trials = 20;
  double tol = kDefaultRankTolerance;
  double horizon = 5.0;
  double dt = 0.01;
  std::string out_path;
  bool classify = false;
};

std::uint64_t DefaultSeed() {
  if (const char* env = std::getenv("NETCTRL_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      // Ignore an unparsable override.
    }
  }
  return 0;
}

std::string Join(const std::vector<std::string>& parts, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += sep;
    s += parts[i];
  }
  return s;
}

std::string NodeList(const std::vector<int>& nodes, const NodeLabeler& label,
                     const char* sep = " ") {
  std::vector<std::string> parts;
  for (int v : nodes) parts.push_back(label(v));
  return Join(parts, sep);
}

void PrintPaths(std::ostream& out, const Linking& linking,
                const NodeLabeler& label) {
  for (const Path& p : linking.paths)
    out << "  " << NodeList(p, label, " -> ") << '\n';
}

// 1-based CLI labels -> validated 0-based indices.
std::vector<int> ToIndices(const std::vector<int>& labels, int n,
                           const char* what) {
  std::vector<int> out;
  for (int v : labels) {
    if (v < 1 || v > n)
      throw ValidationError(std::string(what) + ": node " + std::to_string(v) +
                            " out of range 1.." + std::to_string(n));
    out.push_back(v - 1);
  }
  return out;
}

void WriteOrPrint(const std::string& path, const std::string& text,
                  std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write '" + path + "'");
  file << text;
}

const NodeLabeler kStateLabel = [](int v) { return StateLabel(v); };

int Check(const Options& o, const StructuredSystem& sys, std::ostream& out) {
  const bool output_mode = o.steering.empty() && o.targets.empty() &&
                           sys.has_explicit_inputs() &&
                           sys.has_explicit_outputs();
  ControllabilityVerdict verdict;
  NodeLabeler label = kStateLabel;
  std::vector<int> steering, targets;
  if (output_mode) {
    verdict = is_functional_output_controllable(sys);
    const SystemGraph g = build_graph(sys);
    label = [g](int v) { return g.label(v); };
  } else {
    steering = o.steering.empty()
                   ? sys.available()
                   : ToIndices(o.steering, sys.num_states(), "--steering");
    targets = o.targets.empty()
                  ? sys.targets()
                  : ToIndices(o.targets, sys.num_states(), "--targets");
    verdict = is_functional_target_controllable(sys, steering, targets);
  }

  const char* what = output_mode ? "output" : "target";
  if (o.json) {
    Json j;
    j["mode"] = what;
    if (!output_mode) {
      j["steering"] = nodes_to_json(steering, kStateLabel);
      j["targets"] = nodes_to_json(targets, kStateLabel);
    }
    const Json body = verdict_to_json(verdict, label);
    for (const auto& [key, value] : body.items()) j[key] = value;
    out << j.dump(2) << '\n';
  } else if (verdict.controllable) {
    out << "functionally " << what << " controllable (max linking "
        << verdict.max_linking << " = " << verdict.required << ")\n";
    out << "witness paths:\n";
    PrintPaths(out, verdict.witness, label);
  } else {
    out << "NOT functionally " << what << " controllable (max linking "
        << verdict.max_linking << " < " << verdict.required << ")\n";
  }
  return verdict.controllable ? kOk : kNegative;
}

int Solve(const Options& o, const StructuredSystem& sys, std::ostream& out) {
  const auto result = solve_mtcp(sys, o.prefer_low_index
                                          ? MtcpTieBreak::kSmallestIndex
                                          : MtcpTieBreak::kFlowOrder);
  if (const auto* none = std::get_if<Unsolvable>(&result)) {
    if (o.json) {
      Json j;
      j["solvable"] = false;
      j["achieved"] = none->achieved;
      j["required"] = none->required;
      out << j.dump(2) << '\n';
    } else {
      out << "MTCP unsolvable (max linking " << none->achieved << " < "
          << none->required << ")\n";
    }
    return kNegative;
  }
  const auto& solution = std::get<MtcpSolution>(result);
  if (o.json) {
    Json j;
    j["solvable"] = true;
    j["steering_set"] = nodes_to_json(solution.steering, kStateLabel);
    j["witness_paths"] = linking_to_json(solution.witness, kStateLabel);
    out << j.dump(2) << '\n';
  } else {
    out << "steering set (" << solution.steering.size()
        << "): " << NodeList(solution.steering, kStateLabel) << '\n';
    out << "witness paths:\n";
    PrintPaths(out, solution.witness, kStateLabel);
  }
  return kOk;
}

int Classify(const Options& o, const StructuredSystem& sys,
             std::ostream& out) {
  const NodeClassification c = classify_nodes(sys);
  if (o.json) {
    out << classification_to_json(c).dump(2) << '\n';
  } else {
    for (const auto& [v, label] : c.labels)
      out << StateLabel(v) << ": " << to_string(label) << '\n';
  }
  return kOk;
}

int LinkingCmd(const Options& o, const StructuredSystem& sys,
               std::ostream& out) {
  const LinkingAnalysis a =
      analyze_linking(sys.StateGraph(), sys.available(), sys.targets());
  if (o.json) {
    Json j;
    j["size"] = a.linking.size();
    j["paths"] = linking_to_json(a.linking, kStateLabel);
    j["flow"] = flow_to_json(a.aux, a.flow);
    out << j.dump(2) << '\n';
  } else {
    out << "maximum linking size: " << a.linking.size() << '\n';
    PrintPaths(out, a.linking, kStateLabel);
  }
  return kOk;
}

int SeparatorCmd(const Options& o, const StructuredSystem& sys,
                 std::ostream& out) {
  const Separator s =
      minimal_left_separator(sys.StateGraph(), sys.available(), sys.targets());
  if (o.json) {
    Json j;
    j["size"] = s.nodes.size();
    j["separator"] = nodes_to_json(s.nodes, kStateLabel);
    out << j.dump(2) << '\n';
  } else {
    out << "minimal left separator: {" << NodeList(s.nodes, kStateLabel, ", ")
        << "} (size " << s.nodes.size() << ")\n";
  }
  return kOk;
}

int Structural(const Options& o, const StructuredSystem& sys,
               std::ostream& out) {
  const StructuralDiagnostics d = is_structurally_controllable(sys);
  const SystemGraph g = build_graph(sys);
  const NodeLabeler label = [&g](int v) { return g.label(v); };
  if (o.json) {
    Json j;
    j["structural_controllability"] = structural_to_json(d, g);
    out << j.dump(2) << '\n';
  } else {
    out << (d.controllable ? "structurally controllable"
                           : "NOT structurally controllable")
        << " (input-connected: " << (d.input_connected ? "yes" : "no")
        << ", generic rank [A B] = " << d.generic_rank << "/" << d.num_states
        << ")\n";
    if (!d.unreachable.empty())
      out << "unreachable: " << NodeList(d.unreachable, label) << '\n';
    if (!d.unmatched.empty())
      out << "not covered by stems/cycles: " << NodeList(d.unmatched, label)
          << '\n';
    for (const Path& p : d.stems)
      out << "stem: " << NodeList(p, label, " -> ") << '\n';
    for (const Path& p : d.cycles)
      out << "cycle: " << NodeList(p, label, " -> ") << '\n';
  }
  return d.controllable ? kOk : kNegative;
}

int Verify(const Options& o, const StructuredSystem& sys, std::ostream& out) {
  const auto trials = verify_genericity(sys, o.seed, o.trials, o.tol);
  bool all_agree = true;
  for (const auto& t : trials) all_agree = all_agree && t.agree;
  if (o.json) {
    Json j;
    j["seed"] = o.seed;
    j["trials"] = Json::array();
    for (const auto& t : trials) j["trials"].push_back(trial_to_json(t));
    j["rel_tol"] = o.tol;
    j["all_agree"] = all_agree;
    out << j.dump(2) << '\n';
  } else {
    out << "seed  structural  transfer  pointwise  agree\n";
    int agreeing = 0;
    for (const auto& t : trials) {
      out << t.seed << "  " << t.structural_rank << "  " << t.transfer_rank
          << "  " << t.pointwise_rank << "  " << (t.agree ? "yes" : "NO")
          << '\n';
      agreeing += t.agree ? 1 : 0;
    }
    out << agreeing << "/" << trials.size() << " trials agree\n";
  }
  return all_agree ? kOk : kNegative;
}

int Track(const Options& o, const StructuredSystem& sys, std::ostream& out) {
  const NumericInstance inst = instantiate(sys, o.seed);
  TrajectoryTask task;
  task.reference = default_reference(static_cast<int>(inst.C.rows()));
  task.horizon = o.horizon;
  task.dt = o.dt;
  try {
    task = track_trajectory(inst, std::move(task));
  } catch (const PreconditionError& e) {
    out << "cannot track: " << e.what() << '\n';
    return kNegative;
  }
  if (!o.out_path.empty()) WriteOrPrint(o.out_path, trajectory_csv(task), out);
  if (o.out_path != "-") {
    out << "steps: " << task.input.rows() << " (dt " << task.dt << ")\n";
    out << "startup window: " << task.startup_steps << " step(s)\n";
    out << "max tracking error on grid: " << task.max_error << '\n';
    out << "max tracking error between samples: "
        << task.max_intersample_error << '\n';
  }
  return kOk;
}

int ExportDot(const Options& o, const StructuredSystem& sys,
              std::ostream& out) {
  std::optional<NodeClassification> c;
  if (o.classify) c = classify_nodes(sys);
  WriteOrPrint(o.out_path, serialize_dot(build_graph(sys), c), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  o.seed = DefaultSeed();

  CLI::App app{"Functional target controllability of structured networks",
               "netctrl"};
  app.require_subcommand(1);
  app.fallthrough(false);

  auto add = [&](const char* name, const char* help, bool json = true) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "system file (text or JSON)")
        ->required();
    if (json) sub->add_flag("--json", o.json, "emit JSON");
    return sub;
  };

  CLI::App* check = add("check", "functional target/output controllability");
  check->add_option("--steering", o.steering, "steering nodes (1-based)");
  check->add_option("--targets", o.targets, "target nodes (1-based)");
  CLI::App* solve = add("solve", "minimal steering set within 'available'");
  solve->add_flag("--prefer-low-index", o.prefer_low_index,
                  "lexicographically smallest steering set");
  CLI::App* classify = add("classify", "essential/useful/useless labels");
  CLI::App* linking = add("linking", "maximum (available-targets)-linking");
  CLI::App* separator = add("separator", "minimal left separator");
  CLI::App* structural = add("structural", "point-wise structural check");
  CLI::App* verify = add("verify", "numeric cross-check of the linking rank");
  verify->add_option("--seed", o.seed, "first seed (default NETCTRL_SEED or 0)");
  verify->add_option("--trials", o.trials, "number of seeds")
      ->check(CLI::PositiveNumber);
  verify->add_option("--tol", o.tol, "relative SVD rank tolerance")
      ->check(CLI::Range(0.0, 1.0));
  CLI::App* track = add("track", "least-squares output tracking demo", false);
  track->add_option("--horizon", o.horizon, "time horizon")
      ->check(CLI::PositiveNumber);
  track->add_option("--dt", o.dt, "sample step")->check(CLI::PositiveNumber);
  track->add_option("--out", o.out_path, "CSV path ('-' for stdout)");
  track->add_option("--seed", o.seed, "instance seed");
  CLI::App* dot = add("export-dot", "Graphviz rendering", false);
  dot->add_flag("--classify", o.classify, "style nodes by class");
  dot->add_option("--out", o.out_path, "output path (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "netctrl: " << e.what() << '\n';
    return kUsage;
  }

  try {
    const StructuredSystem sys = load_system(o.file);
    if (check->parsed()) return Check(o, sys, out);
    if (solve->parsed()) return Solve(o, sys, out);
    if (classify->parsed()) return Classify(o, sys, out);
    if (linking->parsed()) return LinkingCmd(o, sys, out);
    if (separator->parsed()) return SeparatorCmd(o, sys, out);
    if (structural->parsed()) return Structural(o, sys, out);
    if (verify->parsed()) return Verify(o, sys, out);
    if (track->parsed()) return Track(o, sys, out);
    if (dot->parsed()) return ExportDot(o, sys, out);
  } catch (const UnsolvableError& e) {
    err << "netctrl: " << e.what() << '\n';
    return kNegative;
  } catch (const std::exception& e) {
    err << "netctrl: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace netctrl::cli
