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

// Acceptance suite: one PASS/FAIL line per criterion; exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <variant>

#include "brute_force.h"
#include "fixtures.h"
#include "netctrl/controllability.h"
#include "netctrl/errors.h"
#include "netctrl/flow_linking.h"
#include "netctrl/numeric_oracle.h"
#include "netctrl/trajectory.h"

namespace netctrl {
namespace {

using oracle::Mask;
using oracle::ToMask;
using testing::NineStateIo;
using testing::DrivenTree;
using testing::NineStateTargets;
using testing::Nodes;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  // Records a failed check; keeps the first message.
  void Require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail << "failed: " << what << "; ";
    pass = false;
  }
};

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool Contains(const std::vector<int>& v, int x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

void FullExampleCriterion(Outcome& o) {
  const StructuredSystem sys = NineStateIo();
  const auto start = Clock::now();
  const SystemGraph g = build_graph(sys);
  const int linking =
      max_linking_size(g.graph(), g.input_nodes(), g.output_nodes());
  const bool functional = is_functional_output_controllable(sys).controllable;
  const bool structural = is_structurally_controllable(sys).controllable;
  const double ms = 1e3 * SecondsSince(start);
  o.Require(linking == 2, "input-output linking size");
  o.Require(functional, "functional output controllability");
  o.Require(structural, "structural controllability");
  o.Require(ms < 1.0, "runtime below 1 ms");
  o.detail << "linking=" << linking << " functional=" << functional
           << " structural=" << structural << " time=" << ms << "ms";
}

void TargetExampleCriterion(Outcome& o) {
  const StructuredSystem sys = NineStateTargets();
  const Digraph g = sys.StateGraph();
  const auto sep = minimal_left_separator(g, sys.available(), sys.targets());
  o.Require(sep.nodes == Nodes({1, 5}), "left separator {x1, x5}");

  const NodeClassification c = classify_nodes(sys);
  o.Require(c.at(0) == NodeClass::kEssential && c.at(1) == NodeClass::kUseful &&
                c.at(2) == NodeClass::kUseless && c.at(3) == NodeClass::kUseful,
            "classification");

  int minimum = -1;
  for (auto tie : {MtcpTieBreak::kFlowOrder, MtcpTieBreak::kSmallestIndex}) {
    const auto r = solve_mtcp(sys, tie);
    const auto* s = std::get_if<MtcpSolution>(&r);
    o.Require(s && s->steering.size() == 2 && Contains(s->steering, 0),
              "MTCP solution of size 2 containing x1");
    if (s) minimum = static_cast<int>(s->steering.size());
  }
  // Every admissible steering set of minimum size contains x1.
  int solutions = 0;
  const auto& a = sys.available();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::vector<int> single{a[i]};
    o.Require(!is_functional_target_controllable(sys, single, sys.targets())
                   .controllable,
              "no single steering node suffices");
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const std::vector<int> pair{a[i], a[j]};
      if (!is_functional_target_controllable(sys, pair, sys.targets())
               .controllable)
        continue;
      ++solutions;
      o.Require(Contains(pair, 0), "x1 in every minimum solution");
    }
  }
  o.detail << "separator={x1,x5} min_size=" << minimum
           << " minimum_solutions=" << solutions;
}

void AuxiliaryExampleCriterion(Outcome& o) {
  const StructuredSystem sys = NineStateTargets();
  const AuxiliaryGraph aux = build_auxiliary_graph(
      sys.StateGraph(), sys.available(), sys.targets());
  const Flow f = max_flow(aux);
  std::set<std::string> cut;
  for (int v : min_cut_source_set(aux, f)) cut.insert(aux.NodeLabel(v));
  const std::set<std::string> expected{"s",   "x4-", "x4+", "x5-", "x3-",
                                       "x3+", "x2-", "x1-", "x2+"};
  o.Require(aux.num_nodes() == 20, "20 auxiliary nodes");
  o.Require(f.value == 2, "flow value 2");
  o.Require(cut == expected, "min-cut source set");
  o.detail << "nodes=" << aux.num_nodes() << " flow=" << f.value
           << " |L|=" << cut.size();
}

void TreeExampleCriterion(Outcome& o) {
  const StructuredSystem sys = DrivenTree();
  const auto root = Nodes({1});
  constexpr int kSeeds = 20;
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    o.Require(controllability_rank(instantiate(sys, seed)) == 3,
              "controllability rank 3");
    for (const auto& t : {Nodes({1, 2, 3}), Nodes({1, 3, 4}), Nodes({3, 4})}) {
      o.Require(pointwise_output_ctrb_rank(instantiate(sys, root, t, seed)) ==
                    static_cast<int>(t.size()),
                "point-wise rank |T|");
    }
    for (int mask = 1; mask < 16; ++mask) {
      std::vector<int> t;
      for (int v = 0; v < 4; ++v)
        if (mask >> v & 1) t.push_back(v);
      o.Require(transfer_rank(instantiate(sys, root, t, seed)) == 1,
                "transfer rank 1");
    }
  }
  for (int mask = 1; mask < 16; ++mask) {
    std::vector<int> t;
    for (int v = 0; v < 4; ++v)
      if (mask >> v & 1) t.push_back(v);
    o.Require(is_functional_target_controllable(sys, root, t).controllable ==
                  (t.size() == 1),
              "functional target controllability iff |T| = 1");
  }
  o.detail << kSeeds << " seeds, 15 target sets, rel_tol "
           << kDefaultRankTolerance;
}

void GenericityCriterion(Outcome& o) {
  constexpr int kPatterns = 20;
  constexpr int kSeedsPerPattern = 20;
  std::mt19937_64 rng(20261019);
  std::uniform_int_distribution<int> size(2, 30), io(1, 5);
  std::uniform_real_distribution<double> density(0.02, 0.25);
  const auto start = Clock::now();
  int pairs = 0, agree = 0, largest = 0;
  std::set<int> ranks;
  for (int k = 0; k < kPatterns; ++k) {
    const int n = size(rng);
    largest = std::max(largest, n);
    const StructuredSystem sys =
        testing::RandomIoSystem(n, io(rng), io(rng), density(rng), rng);
    for (const auto& t :
         verify_genericity(sys, 1000 * k, kSeedsPerPattern)) {
      ++pairs;
      agree += t.agree;
      ranks.insert(t.structural_rank);
      if (!t.agree)
        std::cerr << "disagreement: pattern " << k << " seed " << t.seed
                  << " transfer " << t.transfer_rank << " linking "
                  << t.structural_rank << '\n';
    }
  }
  const double seconds = SecondsSince(start);
  o.Require(pairs >= 200, "at least 200 pairs");
  o.Require(agree == pairs, "agreement in every trial");
  o.Require(seconds < 60.0, "runtime below 60 s");
  o.detail << agree << "/" << pairs << " agree, n<=" << largest
           << ", distinct ranks=" << ranks.size() << ", " << seconds << "s";
}

void BruteForceCriterion(Outcome& o) {
  constexpr int kSystems = 60;
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<int> size(2, 10);
  std::uniform_real_distribution<double> density(0.1, 0.3);
  int solvable = 0, unsolvable = 0, labels = 0;
  int essential = 0, useless = 0;
  while (solvable < kSystems) {
    const StructuredSystem sys =
        testing::RandomTargetSystem(size(rng), 6, 3, density(rng), rng);
    const Digraph g = sys.StateGraph();
    const Mask a = ToMask(sys.available()), t = ToMask(sys.targets());
    const int p = static_cast<int>(sys.targets().size());
    const auto admissible =
        oracle::AdmissibleSteeringSets(g, sys.available(), sys.targets());
    const auto result = solve_mtcp(sys);

    // (c) separator size is the enumerated minimum and it separates.
    const auto sep = minimal_left_separator(g, sys.available(), sys.targets());
    const auto minimum = oracle::MinimumSeparators(g, a, t);
    o.Require(!minimum.empty() &&
                  static_cast<int>(sep.nodes.size()) ==
                      std::popcount(minimum.front()) &&
                  oracle::Separates(g, a, t, ToMask(sep.nodes)),
              "minimum separator");

    if (admissible.empty()) {
      ++unsolvable;
      o.Require(std::holds_alternative<Unsolvable>(result),
                "unsolvable instance reported");
      continue;
    }
    ++solvable;
    // (a) no admissible set is smaller than the returned one.
    const auto* s = std::get_if<MtcpSolution>(&result);
    o.Require(s != nullptr, "solvable instance solved");
    if (!s) continue;
    o.Require(std::find(admissible.begin(), admissible.end(),
                        ToMask(s->steering)) != admissible.end(),
              "solution is admissible");
    for (Mask m : admissible)
      o.Require(std::popcount(m) >= static_cast<int>(s->steering.size()),
                "solution is minimum");
    o.Require(static_cast<int>(s->steering.size()) == p, "solution size p");

    // (b) labels follow the definitions.
    const NodeClassification c = classify_nodes(sys);
    for (int v : sys.available()) {
      ++labels;
      const auto want = oracle::DefinitionLabel(v, admissible);
      const NodeClass got = c.at(v);
      essential += want == oracle::Label::kEssential;
      useless += want == oracle::Label::kUseless;
      o.Require((got == NodeClass::kEssential) ==
                        (want == oracle::Label::kEssential) &&
                    (got == NodeClass::kUseless) ==
                        (want == oracle::Label::kUseless),
                "label of " + StateLabel(v) + " in\n" + serialize_system(sys));
    }
  }
  o.detail << solvable << " solvable + " << unsolvable << " unsolvable systems, "
           << labels << " labels (" << essential << " essential, " << useless
           << " useless)";
}

void ComplexityCriterion(Outcome& o) {
  constexpr int kNodes = 100'000;
  constexpr int kEdges = 300'000;
  std::mt19937_64 rng(42);
  auto edges = testing::RandomSparseEdges(kNodes, kEdges, rng);
  auto available = testing::RandomSubset(kNodes, 1000, rng);
  auto targets = testing::RandomSubset(kNodes, 10, rng);
  const StructuredSystem sys(kNodes, std::move(edges), std::move(available),
                             std::move(targets));
  const auto start = Clock::now();
  const NodeClassification c = classify_nodes(sys);
  const double seconds = SecondsSince(start);
  int counts[3] = {0, 0, 0};
  for (const auto& [v, label] : c.labels) ++counts[static_cast<int>(label)];
  o.Require(c.labels.size() == 1000, "every available node labelled");
  o.Require(seconds < 5.0, "runtime below 5 s");
  o.detail << "n=" << kNodes << " edges=" << sys.state_edges().size()
           << " |A|=1000 |T|=10, " << counts[0] << "/" << counts[1] << "/"
           << counts[2] << " essential/useful/useless, " << seconds << "s";
}

// Grid errors below this are roundoff: the tracker matches the reference
// exactly on the grid, so a change below the floor is not an increase.
constexpr double kRoundoffFloor = 1e-9;

void TrajectoryCriterion(Outcome& o) {
  const NumericInstance inst = instantiate(NineStateIo(), 42);
  auto run = [&](double dt) {
    TrajectoryTask task;
    task.reference = default_reference(2);
    task.horizon = 5.0;
    task.dt = dt;
    return track_trajectory(inst, std::move(task));
  };
  const TrajectoryTask coarse = run(0.01);
  const TrajectoryTask fine = run(0.005);
  o.Require(coarse.max_error < 1e-3, "grid error below 1e-3 at dt 0.01");
  o.Require(coarse.max_intersample_error < 1e-3,
            "inter-sample error below 1e-3 at dt 0.01");
  o.Require(fine.max_error <= std::max(coarse.max_error, kRoundoffFloor),
            "grid error non-increasing when dt halves");
  o.Require(fine.max_intersample_error < coarse.max_intersample_error,
            "inter-sample error decreases when dt halves");

  bool rejected = false;
  try {
    TrajectoryTask task;
    task.reference = default_reference(2);
    track_trajectory(instantiate(DrivenTree(), Nodes({1}), Nodes({3, 4}), 42),
                     std::move(task));
  } catch (const PreconditionError&) {
    rejected = true;
  }
  o.Require(rejected, "two-target request on single-input tree rejected");
  o.detail << "grid error " << coarse.max_error << " -> " << fine.max_error
           << ", inter-sample " << coarse.max_intersample_error << " -> "
           << fine.max_intersample_error << ", two-target request "
           << (rejected ? "rejected" : "accepted");
}

struct Criterion {
  const char* name;
  std::function<void(Outcome&)> check;
};

}  // namespace
}  // namespace netctrl

int main() {
  using namespace netctrl;
  const Criterion criteria[] = {
      {"example with inputs/outputs: linking, functional, structural",
       FullExampleCriterion},
      {"target-control example: separator, classes, MTCP", TargetExampleCriterion},
      {"auxiliary graph: flow value and min-cut source set",
       AuxiliaryExampleCriterion},
      {"single-input tree: point-wise vs functional ranks",
       TreeExampleCriterion},
      {"genericity: transfer rank equals maximum linking", GenericityCriterion},
      {"brute-force oracle equivalence", BruteForceCriterion},
      {"complexity: classify n=100000", ComplexityCriterion},
      {"trajectory tracking demo", TrajectoryCriterion},
  };
  int failed = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome o;
    try {
      c.check(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << index << "] " << c.name
              << " :: " << o.detail.str() << std::endl;
  }
  std::cout << (std::size(criteria) - failed) << "/" << std::size(criteria)
            << " acceptance criteria passed" << std::endl;
  return failed;
}
