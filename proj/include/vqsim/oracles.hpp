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
 * Dense reference integrators, independent of the variational machinery:
 * straightforward Kronecker-product matrix builds and fixed-step RK4.
 * They are deliberately simple so they can serve as ground truth in tests.
 */

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "vqsim/open_system.hpp"
#include "vqsim/pauli.hpp"
#include "vqsim/statevector.hpp"

namespace vqsim {

/// Dense matrix of the operator; qubit 0 is the least-significant bit of
/// the row/column index.
Eigen::MatrixXcd to_dense(const OperatorSum &op);
Eigen::MatrixXcd to_dense(const PauliString &term);

Eigen::VectorXcd to_dense(const StateVector &state);
StateVector from_dense(std::size_t qubit_count, const Eigen::VectorXcd &v);

/// RK4 solution of d psi/dt = -i H psi from psi0 over `duration` using
/// `steps` fixed steps.
Eigen::VectorXcd exact_schrodinger(const Eigen::MatrixXcd &hamiltonian,
                                   const Eigen::VectorXcd &psi0,
                                   double duration, std::size_t steps);

/// RK4 solution of the Lindblad master equation
/// d rho/dt = -i[H, rho] + sum_k (L_k rho L_k^dag - {L_k^dag L_k, rho}/2).
Eigen::MatrixXcd exact_lindblad(const Eigen::MatrixXcd &hamiltonian,
                                const std::vector<Eigen::MatrixXcd> &lindblad,
                                const Eigen::MatrixXcd &rho0, double duration,
                                std::size_t steps);

/// RK4 solution of normalized imaginary time evolution
/// d psi/dtau = -(H - <H>) psi.
Eigen::VectorXcd exact_imag_time(const Eigen::MatrixXcd &hamiltonian,
                                 const Eigen::VectorXcd &psi0,
                                 double duration, std::size_t steps);

/// RK4 solution of the general linear flow d psi/dt = G psi for an
/// arbitrary (not necessarily anti-Hermitian) generator G.
Eigen::VectorXcd exact_linear_flow(const Eigen::MatrixXcd &generator,
                                   const Eigen::VectorXcd &psi0,
                                   double duration, std::size_t steps);

/**
 * Ansatz-free statevector replay of the jump-unravelled trajectory: the
 * explicit first-order drift update (1 - iH dt - (L - <L>) dt) |psi> with
 * renormalization, and exact L_k application at jumps. Makes the same
 * random decisions as run_trajectory given the same seed and time grid.
 */
TrajectoryRecord exact_trajectory(const LindbladModel &model,
                                  const StateVector &psi0, double duration,
                                  double step, std::uint64_t seed,
                                  const std::vector<OperatorSum> &observables);

double trace_distance(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b);
/// Uhlmann fidelity F(rho, sigma) = (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
double fidelity(const Eigen::MatrixXcd &rho, const Eigen::MatrixXcd &sigma);

Eigen::MatrixXcd density_matrix(const Eigen::VectorXcd &psi);

} // namespace vqsim
