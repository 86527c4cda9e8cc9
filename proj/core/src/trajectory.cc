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

#include "netctrl/trajectory.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include <Eigen/QR>
#include <unsupported/Eigen/MatrixFunctions>

#include "netctrl/errors.h"

namespace netctrl {
namespace {

struct Discretized {
  Eigen::MatrixXd a;
  Eigen::MatrixXd b;
};

// Exact zero-order hold: exp([[A, B], [0, 0]] h) = [[Ad, Bd], [0, I]].
Discretized ZeroOrderHold(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                          double h) {
  const Eigen::Index n = a.rows();
  const Eigen::Index m = b.cols();
  Eigen::MatrixXd augmented = Eigen::MatrixXd::Zero(n + m, n + m);
  augmented.topLeftCorner(n, n) = a * h;
  augmented.topRightCorner(n, m) = b * h;
  const Eigen::MatrixXd e = augmented.exp();
  return {e.topLeftCorner(n, n), e.topRightCorner(n, m)};
}

}  // namespace

std::function<Eigen::VectorXd(double)> default_reference(int num_outputs) {
  return [num_outputs](double t) {
    Eigen::VectorXd y(num_outputs);
    for (int l = 0; l < num_outputs; ++l)
      y(l) = l % 2 == 0 ? std::sin(t) * t * t : (1.0 - std::cos(t)) * t;
    return y;
  };
}

TrajectoryTask track_trajectory(const NumericInstance& inst,
                                TrajectoryTask task) {
  if (!(task.horizon > 0.0) || !(task.dt > 0.0))
    throw PreconditionError("horizon and dt must be positive");
  if (task.intersample_points < 1)
    throw PreconditionError("intersample_points must be >= 1");
  if (!task.reference) throw PreconditionError("missing reference trajectory");
  const Eigen::Index n = inst.A.rows();
  const Eigen::Index m = inst.B.cols();
  const Eigen::Index p = inst.C.rows();
  if (p == 0) throw PreconditionError("instance has no outputs");
  if (transfer_rank(inst) < p)
    throw PreconditionError("system is not right invertible: transfer rank < " +
                            std::to_string(p));
  const Eigen::VectorXd ref0 = task.reference(0.0);
  if (ref0.size() != p)
    throw PreconditionError("reference dimension does not match outputs");
  if (ref0.lpNorm<Eigen::Infinity>() > 1e-12)
    throw PreconditionError("reference must start at 0 (zero initial state)");

  const auto steps = static_cast<Eigen::Index>(
      std::max(1.0, std::round(task.horizon / task.dt)));
  const Discretized zoh = ZeroOrderHold(inst.A, inst.B, task.dt);

  // Markov parameters C Ad^{k-1} Bd, k = 1..n; the discrete relative degree
  // is the first k with a nonzero one.
  std::vector<Eigen::MatrixXd> markov;
  {
    Eigen::MatrixXd power_b = zoh.b;
    for (Eigen::Index k = 0; k < std::max<Eigen::Index>(n, 1); ++k) {
      markov.push_back(inst.C * power_b);
      power_b = zoh.a * power_b;
    }
  }
  double largest = 0.0;
  for (const auto& h : markov) largest = std::max(largest, h.norm());
  task.startup_steps = 1;
  while (task.startup_steps <= static_cast<int>(markov.size()) &&
         markov[task.startup_steps - 1].norm() <= 1e-12 * largest)
    ++task.startup_steps;

  task.time.resize(steps + 1);
  task.reference_values.resize(steps + 1, p);
  for (Eigen::Index k = 0; k <= steps; ++k) {
    task.time(k) = static_cast<double>(k) * task.dt;
    task.reference_values.row(k) = task.reference(task.time(k)).transpose();
  }

  task.input.resize(steps, m);
  const Eigen::MatrixXd& lead = markov.front();
  if (task.startup_steps == 1 && numeric_rank(lead, 1e-12) == p) {
    // Full-row-rank leading Markov parameter: the least-squares problem has
    // a zero-residual solution found step by step.
    const Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> solver(lead);
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    for (Eigen::Index k = 0; k < steps; ++k) {
      const Eigen::VectorXd free_response = inst.C * (zoh.a * x);
      const Eigen::VectorXd u =
          solver.solve(task.reference_values.row(k + 1).transpose() -
                       free_response);
      task.input.row(k) = u.transpose();
      x = zoh.a * x + zoh.b * u;
    }
  } else {
    // General case: dense block-Toeplitz least squares (minimum norm).
    Eigen::MatrixXd toeplitz = Eigen::MatrixXd::Zero(steps * p, steps * m);
    Eigen::MatrixXd power_b = zoh.b;
    for (Eigen::Index lag = 0; lag < steps; ++lag) {
      const Eigen::MatrixXd h = inst.C * power_b;
      for (Eigen::Index j = 0; j + lag < steps; ++j)
        toeplitz.block((j + lag) * p, j * m, p, m) = h;
      power_b = zoh.a * power_b;
    }
    Eigen::VectorXd target(steps * p);
    for (Eigen::Index k = 0; k < steps; ++k)
      target.segment(k * p, p) = task.reference_values.row(k + 1).transpose();
    const Eigen::VectorXd u =
        Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd>(toeplitz)
            .solve(target);
    for (Eigen::Index k = 0; k < steps; ++k)
      task.input.row(k) = u.segment(k * m, m).transpose();
  }

  // Replay on the sample grid and between samples.
  const int q = task.intersample_points;
  const Discretized fine = ZeroOrderHold(inst.A, inst.B, task.dt / q);
  task.output.resize(steps + 1, p);
  task.output.row(0).setZero();
  task.max_error = 0.0;
  task.max_intersample_error = 0.0;
  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  for (Eigen::Index k = 0; k < steps; ++k) {
    const Eigen::VectorXd u = task.input.row(k).transpose();
    if (k >= task.startup_steps) {
      Eigen::VectorXd xs = x;
      for (int j = 1; j <= q; ++j) {
        xs = fine.a * xs + fine.b * u;
        const double t = task.time(k) + task.dt * j / q;
        const double err =
            (inst.C * xs - task.reference(t)).lpNorm<Eigen::Infinity>();
        task.max_intersample_error = std::max(task.max_intersample_error, err);
      }
    }
    x = zoh.a * x + zoh.b * u;
    task.output.row(k + 1) = (inst.C * x).transpose();
  }
  for (Eigen::Index k = task.startup_steps; k <= steps; ++k) {
    const double err =
        (task.output.row(k) - task.reference_values.row(k)).lpNorm<Eigen::Infinity>();
    task.max_error = std::max(task.max_error, err);
  }
  return task;
}

std::string trajectory_csv(const TrajectoryTask& task) {
  std::ostringstream out;
  out << std::setprecision(12);
  const Eigen::Index p = task.reference_values.cols();
  const Eigen::Index m = task.input.cols();
  out << "t";
  for (Eigen::Index l = 0; l < p; ++l) out << ",ref_" << l + 1;
  for (Eigen::Index l = 0; l < p; ++l) out << ",y_" << l + 1;
  for (Eigen::Index l = 0; l < m; ++l) out << ",u_" << l + 1;
  out << '\n';
  const Eigen::Index steps = task.input.rows();
  for (Eigen::Index k = 0; k < task.time.size(); ++k) {
    out << task.time(k);
    for (Eigen::Index l = 0; l < p; ++l) out << ',' << task.reference_values(k, l);
    for (Eigen::Index l = 0; l < p; ++l) out << ',' << task.output(k, l);
    const Eigen::Index row = std::min(k, steps - 1);
    for (Eigen::Index l = 0; l < m; ++l) out << ',' << task.input(row, l);
    out << '\n';
  }
  return out.str();
}

}  // namespace netctrl
