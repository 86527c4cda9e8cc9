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

#include "netctrl/numeric_oracle.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

#include "netctrl/errors.h"
#include "netctrl/flow_linking.h"

namespace netctrl {
namespace {

class ParameterSampler {
 public:
  ParameterSampler(std::uint64_t seed, ValueRange range)
      : rng_(seed), magnitude_(range.low, range.high) {
    if (!(range.low > 0.0) || !(range.high >= range.low))
      throw PreconditionError("value range must satisfy 0 < low <= high");
  }

  double Draw() {
    const double v = magnitude_(rng_);
    return sign_(rng_) ? v : -v;
  }

 private:
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> magnitude_;
  std::bernoulli_distribution sign_{0.5};
};

NumericInstance Instantiate(const StructuredSystem& sys,
                            const StructuredSystem::NodeSets& inputs,
                            const StructuredSystem::NodeSets& outputs,
                            std::uint64_t seed, ValueRange range) {
  const int n = sys.num_states();
  ParameterSampler sampler(seed, range);
  NumericInstance inst;
  inst.seed = seed;
  inst.range = range;
  inst.A = Eigen::MatrixXd::Zero(n, n);
  inst.B = Eigen::MatrixXd::Zero(n, static_cast<Eigen::Index>(inputs.size()));
  inst.C = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(outputs.size()), n);
  for (const Edge& e : sys.state_edges()) inst.A(e.to, e.from) = sampler.Draw();
  for (std::size_t k = 0; k < inputs.size(); ++k)
    for (int j : inputs[k]) inst.B(j, k) = sampler.Draw();
  for (std::size_t k = 0; k < outputs.size(); ++k)
    for (int j : outputs[k]) inst.C(k, j) = sampler.Draw();
  return inst;
}

StructuredSystem::NodeSets Singletons(std::span<const int> nodes) {
  StructuredSystem::NodeSets sets;
  for (int v : nodes) sets.push_back({v});
  return sets;
}

// Indices of states lying on some walk from an input to an output, read off
// the exact zero pattern of the instance.
std::vector<int> RelevantStates(const NumericInstance& inst) {
  const int n = static_cast<int>(inst.A.rows());
  std::vector<Edge> edges;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (inst.A(j, i) != 0.0) edges.push_back({i, j});
  const Digraph g(n, std::move(edges));
  std::vector<int> driven, observed;
  for (int j = 0; j < n; ++j) {
    if (inst.B.cols() > 0 && inst.B.row(j).cwiseAbs().maxCoeff() > 0.0)
      driven.push_back(j);
    if (inst.C.rows() > 0 && inst.C.col(j).cwiseAbs().maxCoeff() > 0.0)
      observed.push_back(j);
  }
  const auto forward = g.ReachableFrom(driven);
  const auto backward = g.CanReach(observed);
  std::vector<int> relevant;
  for (int j = 0; j < n; ++j)
    if (forward[j] && backward[j]) relevant.push_back(j);
  return relevant;
}

}  // namespace

NumericInstance instantiate(const StructuredSystem& sys, std::uint64_t seed,
                            ValueRange range) {
  return Instantiate(sys,
                     sys.has_explicit_inputs() ? sys.explicit_inputs()
                                               : Singletons(sys.available()),
                     sys.has_explicit_outputs() ? sys.explicit_outputs()
                                                : Singletons(sys.targets()),
                     seed, range);
}

NumericInstance instantiate(const StructuredSystem& sys,
                            std::span<const int> steering,
                            std::span<const int> targets, std::uint64_t seed,
                            ValueRange range) {
  for (int v : steering)
    if (v < 0 || v >= sys.num_states())
      throw PreconditionError("steering node out of range");
  for (int v : targets)
    if (v < 0 || v >= sys.num_states())
      throw PreconditionError("target node out of range");
  return Instantiate(sys, Singletons(steering), Singletons(targets), seed,
                     range);
}

int numeric_rank(const Eigen::MatrixXd& m, double rel_tol) {
  if (m.size() == 0) return 0;
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > rel_tol * sv(0)) ++rank;
  return rank;
}

Eigen::MatrixXd reachable_subspace_basis(const Eigen::MatrixXd& a,
                                         const Eigen::MatrixXd& b,
                                         double rel_tol) {
  const Eigen::Index n = a.rows();
  Eigen::MatrixXd basis(n, 0);
  Eigen::MatrixXd block = b;
  while (block.cols() > 0 && basis.cols() < n) {
    const double reference = block.colwise().norm().maxCoeff();
    if (reference == 0.0) break;
    for (int pass = 0; pass < 2; ++pass)
      block -= basis * (basis.transpose() * block);
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(block, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    Eigen::Index keep = 0;
    while (keep < sv.size() && sv(keep) > rel_tol * reference) ++keep;
    keep = std::min(keep, n - basis.cols());
    if (keep == 0) break;
    Eigen::MatrixXd grown(n, basis.cols() + keep);
    grown << basis, svd.matrixU().leftCols(keep);
    basis = std::move(grown);
    block = a * basis.rightCols(keep);
  }
  return basis;
}

int controllability_rank(const NumericInstance& inst, double rel_tol) {
  return static_cast<int>(
      reachable_subspace_basis(inst.A, inst.B, rel_tol).cols());
}

int pointwise_output_ctrb_rank(const NumericInstance& inst, double rel_tol) {
  const Eigen::MatrixXd basis =
      reachable_subspace_basis(inst.A, inst.B, rel_tol);
  if (basis.cols() == 0 || inst.C.rows() == 0) return 0;
  return numeric_rank(inst.C * basis, rel_tol);
}

int transfer_rank(const NumericInstance& inst, int num_samples,
                  double rel_tol) {
  if (num_samples < 3)
    throw PreconditionError("transfer_rank needs at least 3 sample points");
  const std::vector<int> relevant = RelevantStates(inst);
  if (relevant.empty()) return 0;

  const auto r = static_cast<Eigen::Index>(relevant.size());
  Eigen::MatrixXd a(r, r), b(r, inst.B.cols()), c(inst.C.rows(), r);
  for (Eigen::Index i = 0; i < r; ++i) {
    b.row(i) = inst.B.row(relevant[i]);
    c.col(i) = inst.C.col(relevant[i]);
    for (Eigen::Index j = 0; j < r; ++j)
      a(i, j) = inst.A(relevant[i], relevant[j]);
  }
  const Eigen::VectorXcd spectrum =
      Eigen::EigenSolver<Eigen::MatrixXd>(a, false).eigenvalues();

  const int full = static_cast<int>(std::min(c.rows(), b.cols()));
  std::mt19937_64 rng(inst.seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> point(1.0, 10.0);
  constexpr int kAttempts = 100;
  int best = 0;
  for (int k = 0; k < num_samples && best < full; ++k) {
    bool sampled = false;
    for (int attempt = 0; attempt < kAttempts && !sampled; ++attempt) {
      const double s = point(rng);
      double gap = std::numeric_limits<double>::infinity();
      for (Eigen::Index i = 0; i < spectrum.size(); ++i)
        gap = std::min(gap, std::abs(spectrum(i) - s));
      if (gap < 1e-2 * s) continue;
      Eigen::MatrixXd shifted = -a;
      shifted.diagonal().array() += s;
      const Eigen::PartialPivLU<Eigen::MatrixXd> lu(shifted);
      if (!(lu.rcond() > 1e-12)) continue;
      best = std::max(best, numeric_rank(c * lu.solve(b), rel_tol));
      sampled = true;
    }
    if (!sampled)
      throw SingularSampleError(
          "every sample point was too close to the spectrum of A");
  }
  return best;
}

std::vector<VerificationTrial> verify_genericity(const StructuredSystem& sys,
                                                 std::uint64_t first_seed,
                                                 int trials, double rel_tol) {
  const SystemGraph g = build_io_graph(sys);
  const int structural =
      max_linking_size(g.graph(), g.input_nodes(), g.output_nodes());
  std::vector<VerificationTrial> report;
  report.reserve(std::max(trials, 0));
  for (int k = 0; k < trials; ++k) {
    VerificationTrial trial;
    trial.seed = first_seed + static_cast<std::uint64_t>(k);
    const NumericInstance inst = instantiate(sys, trial.seed);
    trial.structural_rank = structural;
    trial.transfer_rank = transfer_rank(inst, 5, rel_tol);
    trial.pointwise_rank = pointwise_output_ctrb_rank(inst, rel_tol);
    trial.agree = trial.transfer_rank == trial.structural_rank;
    report.push_back(trial);
  }
  return report;
}

}  // namespace netctrl
