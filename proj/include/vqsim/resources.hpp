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
 * Measurement/shot budgeting formulas for the generalised-evolution
 * algorithm. These are pessimistic asymptotic estimates; the Delta bounds
 * are inputs (measured or assumed), not derived.
 */

#pragma once

#include <cstdint>
#include <vector>

namespace vqsim {

struct CostInputs {
    double b_norm_max = 1.0;  ///< ||B||_max
    double delta_max = 1.0;   ///< Delta_max
    double delta3_max = 1.0;  ///< Delta_3^(max)
    double duration = 1.0;    ///< T
    double eps_i = 0.5;       ///< per-matrix-element accuracy
    double eps_a = 0.5;       ///< discretization accuracy
    double eps_d = 0.1;       ///< diagonal-factor accuracy (SVD route)
    // Circuit counts per step.
    std::uint64_t n_p = 1;      ///< parameters
    std::uint64_t n_d = 1;      ///< derivative terms per parameter
    std::uint64_t n_b = 1;      ///< terms of B
    std::uint64_t n_bdb = 1;    ///< terms of B^dag B
    std::uint64_t n_aj = 1;     ///< source operators A_j
    std::uint64_t n_aj_terms = 1; ///< terms per A_j
    std::uint64_t n_h = 1;      ///< Hamiltonian terms (SVD route)
    double svd_duration = 1.0;  ///< T_SVD
    double c = 1.0;             ///< <v|D^2|v>
    std::vector<double> l_infinity_norms; ///< ||L_k^dag L_k||_inf

    void validate() const;
};

/// N_S = ||B||_max Delta_max^2 T^2 / eps_I^2, rounded up.
std::uint64_t shots_per_term(const CostInputs &inputs);

struct StepBudget {
    std::uint64_t steps; ///< N_A
    double step;         ///< implied dt = eps_A^2 / (Delta_3 T^2)
};
/// N_A = Delta_3^(max) T^3 / eps_A^2, rounded up.
StepBudget steps_required(const CostInputs &inputs);

/// N_I = N_BdB N_P^2 N_D^2 + 2 N_B N_D N_P + N_BdB
///       + N_B N_Aj N'_Aj (N_P N_D + 1).
std::uint64_t circuits_per_step(const CostInputs &inputs);

/// Plain: N_S * N_A * N_I (exact product of the rounded factors).
/// SVD:   ||B||_max Delta^2 Delta_3 T_SVD^5 / ((eps_A - eps_D)^2 eps_I^2)
///        * (N_P^2 N_D^2 + N_P N_H N_D), rounded up.
std::uint64_t total_measurements(const CostInputs &inputs, bool svd = false);

struct JumpBudget {
    double bound;       ///< T * sum_k ||L_k^dag L_k||_inf
    double local_bound; ///< T * max_k ||L_k^dag L_k||_inf
};
JumpBudget jump_budget(const CostInputs &inputs);

/// alpha = ln(2/(C eps_D))/2, the weight that makes 2 e^{-2 alpha}/C = eps_D.
double alpha_for_accuracy(double c, double eps_d);

} // namespace vqsim
