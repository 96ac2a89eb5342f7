// Copyright 2026 The vqsim developers.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Monte-Carlo wave-function simulation of the Lindblad master equation:
 * variational continuous drift between quantum jumps, jumps applied
 * through per-channel SVD routes, and trajectory averaging.
 *
 * The jump test follows the stochastic scheme exactly: accumulate
 * Gamma += gamma(t) dt with gamma(t) = sum_k <L_k^dag L_k> and continue
 * while e^{-Gamma} >= q; on violation draw q' to select the channel from
 * the cumulative rate ratios, apply the jump, reset Gamma, redraw q. A
 * jump consumes the step (the drift is not advanced in the same dt).
 *
 * Channel rates and the drift counter-term are always evaluated as exact
 * expectations on the variational state; the estimator mode configures the
 * M/V assembly of the drift only. This keeps the random decision stream a
 * function of (seed, time grid) alone, so the dense trajectory oracle can
 * replay it decision-for-decision.
 */

#pragma once

#include <cstdint>
#include <vector>

#include "vqsim/engine.hpp"
#include "vqsim/linalg.hpp"

namespace vqsim {

class LindbladModel {
  public:
    LindbladModel(OperatorSum hamiltonian,
                  std::vector<OperatorSum> lindblad_ops);

    std::size_t qubit_count() const { return hamiltonian_.qubit_count(); }
    const OperatorSum &hamiltonian() const { return hamiltonian_; }
    const std::vector<OperatorSum> &lindblad_ops() const {
        return lindblad_ops_;
    }
    std::size_t channel_count() const { return lindblad_ops_.size(); }
    /// L = 1/2 sum_k L_k^dag L_k, precomputed at construction.
    const OperatorSum &damping() const { return damping_; }
    /// L_k^dag L_k for channel k.
    const OperatorSum &channel_rate_op(std::size_t k) const {
        return rate_ops_[k];
    }

  private:
    OperatorSum hamiltonian_;
    std::vector<OperatorSum> lindblad_ops_;
    std::vector<OperatorSum> rate_ops_;
    OperatorSum damping_;
};

/// The drift drive A = -iH - (L - <L>) evaluated on `state`.
OperatorSum drift_operator(const LindbladModel &model,
                           const StateVector &state);

/// The same drive as a Self source whose counter-term <L> is re-measured
/// on the current variational state every step.
SourceTerm drift_source(const LindbladModel &model);

struct JumpEvent {
    double time;
    std::size_t channel;
};

struct TrajectoryRecord {
    std::uint64_t seed = 0;
    std::vector<JumpEvent> jumps;
    std::vector<double> times;
    std::vector<std::vector<double>> thetas;      ///< per grid point
    std::vector<std::vector<double>> observables; ///< [time][observable]
};

struct TrajectoryOptions {
    double duration = 1.0;
    double step = 0.01;
    Regularization regularization;
    EstimatorMode estimator;
    std::vector<OperatorSum> observables;
    std::vector<SvdRoute> jump_routes; ///< one per channel
    SvdRouteOptions route_options;
    bool record_theta = false;
};

TrajectoryRecord run_trajectory(const LindbladModel &model,
                                const Ansatz &ansatz,
                                const std::vector<double> &theta0,
                                const TrajectoryOptions &options,
                                std::uint64_t seed);

/// Seed for trajectory `index` of a run keyed by `master_seed`; a
/// splitmix-style mix so streams are reproducible and order-independent.
std::uint64_t trajectory_seed(std::uint64_t master_seed, std::uint64_t index);

/// Run `count` trajectories (optionally on `workers` threads); the result
/// order is by index regardless of scheduling.
std::vector<TrajectoryRecord>
run_trajectories(const LindbladModel &model, const Ansatz &ansatz,
                 const std::vector<double> &theta0,
                 const TrajectoryOptions &options, std::uint64_t master_seed,
                 std::size_t count, std::size_t workers = 1);

struct AveragedSeries {
    std::vector<double> times;
    std::vector<std::vector<double>> mean;      ///< [time][observable]
    std::vector<std::vector<double>> std_error; ///< [time][observable]
};

/// Per-grid-point sample mean and standard error across trajectories.
/// Throws on misaligned time grids; a single record gets std_error 0.
AveragedSeries
average_trajectories(const std::vector<TrajectoryRecord> &records);

struct IsingBenchmark {
    LindbladModel model;
    Ansatz ansatz;
    OperatorSum observable; ///< C = sum_<ij> Z_i Z_j / 7
    std::vector<SvdRoute> jump_routes;
};

/// The 6-qubit dissipative transverse-field Ising benchmark:
/// H = (J/4) sum_<ij> Z_i Z_j + h_X sum_i X_i with J = h_X = 1 on the
/// 7-bond lattice, L_i = sqrt(gamma) sigma^+_i with gamma = 1, the
/// 54-parameter Hamiltonian ansatz, and per-qubit sigma^+ jump routes.
IsingBenchmark build_ising_benchmark();

} // namespace vqsim
