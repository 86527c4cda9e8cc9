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

#ifndef NETCTRL_NUMERIC_ORACLE_H_
#define NETCTRL_NUMERIC_ORACLE_H_

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "netctrl/system_model.h"

namespace netctrl {

inline constexpr double kDefaultRankTolerance = 1e-9;

// Nonzero parameters are drawn uniformly from [-high, -low] U [low, high].
struct ValueRange {
  double low = 0.1;
  double high = 2.0;
};

// A concrete (A, B, C) realising a structured pattern. Structural zeros are
// exact 0.0.
struct NumericInstance {
  Eigen::MatrixXd A;
  Eigen::MatrixXd B;
  Eigen::MatrixXd C;
  std::uint64_t seed = 0;
  ValueRange range;
};

// Uses the explicit input/output patterns when present, otherwise one input
// per available node and one output per target node.
NumericInstance instantiate(const StructuredSystem& sys, std::uint64_t seed,
                            ValueRange range = {});

// B_S has one column per steering node, C_T one row per target.
NumericInstance instantiate(const StructuredSystem& sys,
                            std::span<const int> steering,
                            std::span<const int> targets, std::uint64_t seed,
                            ValueRange range = {});

// Number of singular values above rel_tol times the largest one.
int numeric_rank(const Eigen::MatrixXd& m,
                 double rel_tol = kDefaultRankTolerance);

// Orthonormal basis of span[B, AB, ..., A^{n-1}B], built block by block with
// re-orthogonalisation; a new direction is kept when it retains more than
// rel_tol of the norm of the block it came from.
Eigen::MatrixXd reachable_subspace_basis(const Eigen::MatrixXd& a,
                                         const Eigen::MatrixXd& b,
                                         double rel_tol = kDefaultRankTolerance);

// rank [B, AB, ..., A^{n-1}B].
int controllability_rank(const NumericInstance& inst,
                         double rel_tol = kDefaultRankTolerance);

// rank C[B, AB, ..., A^{n-1}B]; equals p iff point-wise output controllable.
int pointwise_output_ctrb_rank(const NumericInstance& inst,
                               double rel_tol = kDefaultRankTolerance);

// Normal rank of C (sI - A)^{-1} B estimated as the maximum numeric rank over
// `num_samples` real sample points s in [1, 10] kept away from the spectrum
// of A. Throws PreconditionError for num_samples < 3 and SingularSampleError
// when no usable sample point is found.
int transfer_rank(const NumericInstance& inst, int num_samples = 5,
                  double rel_tol = kDefaultRankTolerance);

// One structural/numeric cross-check.
struct VerificationTrial {
  std::uint64_t seed = 0;
  int structural_rank = 0;  // maximum linking size
  int transfer_rank = 0;
  int pointwise_rank = 0;
  bool agree = false;       // transfer_rank == structural_rank
};

// Seeds first_seed, first_seed + 1, ... Uses the same input/output
// convention as instantiate(sys, seed).
std::vector<VerificationTrial> verify_genericity(
    const StructuredSystem& sys, std::uint64_t first_seed, int trials,
    double rel_tol = kDefaultRankTolerance);

}  // namespace netctrl

#endif  // NETCTRL_NUMERIC_ORACLE_H_
