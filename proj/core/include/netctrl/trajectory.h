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

#ifndef NETCTRL_TRAJECTORY_H_
#define NETCTRL_TRAJECTORY_H_

#include <functional>
#include <string>

#include <Eigen/Dense>

#include "netctrl/numeric_oracle.h"

namespace netctrl {

// Output tracking on a zero-order-hold discretisation of an instance.
//
// Inputs: `reference`, `horizon`, `dt`, `intersample_points`. The remaining
// fields are filled by track_trajectory(). Rows of the sample matrices are
// time steps.
struct TrajectoryTask {
  std::function<Eigen::VectorXd(double)> reference;
  double horizon = 5.0;
  double dt = 0.01;
  // Sub-points per step used to evaluate the continuous-time response
  // between samples.
  int intersample_points = 10;

  Eigen::VectorXd time;             // N + 1 grid points
  Eigen::MatrixXd reference_values; // (N + 1) x p
  Eigen::MatrixXd output;           // (N + 1) x p, output(0) == 0
  Eigen::MatrixXd input;            // N x m, held on [t_k, t_k+1)
  int startup_steps = 0;            // discrete relative degree r
  double max_error = 0.0;           // over grid points k >= r
  double max_intersample_error = 0.0;
};

// Chooses the input sequence minimising sum_k |y(t_k) - ref(t_k)|^2 from
// zero initial state. Throws PreconditionError if the instance is not right
// invertible (transfer rank < p), if ref(0) != 0, or for a non-positive
// horizon or step.
TrajectoryTask track_trajectory(const NumericInstance& inst,
                                TrajectoryTask task);

// Component l is t^2 sin t for even l and t (1 - cos t) for odd l.
std::function<Eigen::VectorXd(double)> default_reference(int num_outputs);

// Columns: t, ref_1..ref_p, y_1..y_p, u_1..u_m. The input column on the
// last row repeats the final held value.
std::string trajectory_csv(const TrajectoryTask& task);

}  // namespace netctrl

#endif  // NETCTRL_TRAJECTORY_H_
