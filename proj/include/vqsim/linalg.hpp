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
 * Variational linear algebra on the generalised-evolution engine:
 * matrix-vector products and linear solves through extrapolation paths,
 * and non-unitary matrix application through an SVD factorization realized
 * as real time (U, V) plus normalized imaginary time (D).
 */

#pragma once

#include <Eigen/Dense>

#include "vqsim/engine.hpp"

namespace vqsim {

enum class PathVariant {
    Unnormalized, ///< E(t) = (t/T)M + (1-t/T)I, endpoint M|v0>
    Normalized,   ///< same path, norm tracked by a classical factor N(t)
    Inverse,      ///< E(t) d|v>/dt = -G|v>, endpoint M^{-1}|v0>
};

struct ExtrapolationPath {
    OperatorSum target;   ///< M
    double length = 1.0;  ///< T; trajectories for other T are reparameterizations
    PathVariant variant = PathVariant::Unnormalized;
};

struct LinalgOptions {
    double step = 1e-3;
    Regularization regularization;
    EstimatorMode estimator;
};

struct LinalgResult {
    std::vector<double> theta;
    Complex scale;     ///< ansatz scale factor at the endpoint (1 if disabled)
    TimeSeries series; ///< parameter history of the underlying evolution
};

/// Evolve d|v>/dt = G|v(0)> with G = (M - I)/T; the prepared endpoint
/// approximates M|v0> with the norm carried by the ansatz scale.
LinalgResult multiply_via_path(const OperatorSum &m, const Ansatz &ansatz,
                               const std::vector<double> &theta0,
                               const LinalgOptions &options = {},
                               double path_length = 1.0);

/// Norm-tracked variant: d|psi>/dt = (Ndot/N)|psi> + N G |psi(0)> with
/// N(t) = 1/||E(t)|v0>|| computed classically from <M^dag + M> and
/// <M^dag M> on |v0>. Endpoint approximates M|v0>/||M|v0>||.
/// Throws when N(t) diverges (the target annihilates the interpolant).
LinalgResult multiply_via_normalized_path(const OperatorSum &m,
                                          const Ansatz &ansatz,
                                          const std::vector<double> &theta0,
                                          const LinalgOptions &options = {},
                                          double path_length = 1.0);

/// Evolve E(t) d|v>/dt = -G|v>; the endpoint approximates M^{-1}|v0>.
/// Throws when E(t) is numerically singular along the path (dense
/// condition estimate above 1e12, checked on the time grid).
LinalgResult solve_linear_system(const OperatorSum &m, const Ansatz &ansatz,
                                 const std::vector<double> &theta0,
                                 const LinalgOptions &options = {},
                                 double path_length = 1.0);

/// Pauli expansion of a dense 2^n x 2^n matrix; coefficients below `tol`
/// are dropped.
OperatorSum decompose_dense(const Eigen::MatrixXcd &m, std::size_t qubit_count,
                            double tol = 1e-12);

struct SvdRoute {
    std::size_t qubit_count = 0;
    OperatorSum u_hamiltonian; ///< U = exp(-i H^U T^U)
    double u_time = 0.0;
    OperatorSum v_hamiltonian; ///< V = exp(-i H^V T^V)
    double v_time = 0.0;
    OperatorSum d_hamiltonian; ///< D ~ exp(-H^D T^D), alpha-regularized zeros
    double d_time = 0.0;
    double alpha = 0.0;
    double c = -1.0; ///< measured ||M v||^2 when a state was supplied, else -1
    bool zero_output = false; ///< C under the 1e-12 floor: output is the zero vector

    // Placeholder single-qubit zero operators until the route is built.
    SvdRoute()
        : u_hamiltonian(OperatorSum(1)), v_hamiltonian(OperatorSum(1)),
          d_hamiltonian(OperatorSum(1)) {}
};

/**
 * Dense SVD M = U D V; H^U and H^V come from the principal matrix
 * logarithm (eigenphases in (-pi, pi], evolution times fixed to 1) and
 * H^D from -log of the singular values with zero singular values replaced
 * by the regularization weight alpha = ln(2/(C eps_d))/2, where
 * C = ||M v||^2 is measured on the supplied state.
 */
SvdRoute build_svd_route(const Eigen::MatrixXcd &m, double eps_d,
                         const Eigen::VectorXcd &v);

/// The closed-form jump route for sigma^+ = |1><0| on one qubit of an
/// n-qubit register: H_V = X with T_V = pi/2, H_D = |0><0| with T_D = 6,
/// U = I.
SvdRoute sigma_plus_route(std::size_t qubit, std::size_t qubit_count);

struct SvdRouteOptions {
    double v_step = 0.01;  ///< real time step for the V stage
    double d_step = 0.1;   ///< imaginary time step for the D stage
    double u_step = 0.01;  ///< real time step for the U stage
    Regularization regularization;
    EstimatorMode estimator;
};

/// Apply the route to the variational state: real time under H^V, then
/// normalized imaginary time under H^D, then real time under H^U.
/// The final prepared state approximates M|psi>/||M|psi>||.
std::vector<double> apply_svd_route(const SvdRoute &route, const Ansatz &ansatz,
                                    const std::vector<double> &theta,
                                    const SvdRouteOptions &options = {});

/**
 * Quality of the alpha-regularized diagonal factor: the infidelity
 * 1 - |<psi_alpha|psi_D>|^2 between the normalized states D_alpha|v> and
 * D|v>. Satisfies the bound <= 2 e^{-2 alpha} / C with C = <v|D^2|v>.
 */
double d_approximation_error(const Eigen::MatrixXcd &d,
                             const Eigen::MatrixXcd &d_alpha,
                             const Eigen::VectorXcd &v);

} // namespace vqsim
