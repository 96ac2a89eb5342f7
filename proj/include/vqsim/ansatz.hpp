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
 * Parameterized circuits with analytic derivative decomposition.
 *
 * Every gate implements exp(-i*theta*G) for a Hermitian generator G with
 * real Pauli coefficients. For G = sum_i c_i sigma_i the derivative of the
 * gate decomposes into the unitary insertions sigma_i with weights -i*c_i.
 *
 * An optional global scale alpha = r*exp(i*phi) adds two real parameters.
 * When enabled they occupy the LAST two slots of the parameter vector, in
 * the order (r, phi).
 */

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vqsim/circuit.hpp"
#include "vqsim/pauli.hpp"
#include "vqsim/statevector.hpp"

namespace vqsim {

struct ParamGate {
    OperatorSum generator; ///< Hermitian, real Pauli coefficients.
    std::size_t slot;      ///< Parameter index driving this gate.
};

class Ansatz {
  public:
    Ansatz(StateVector reference, std::vector<ParamGate> gates,
           bool scale_enabled = false);

    std::size_t qubit_count() const { return reference_.qubit_count(); }
    const StateVector &reference_state() const { return reference_; }
    const std::vector<ParamGate> &gates() const { return gates_; }
    bool scale_enabled() const { return scale_enabled_; }

    /// Number of circuit parameter slots (excluding scale).
    std::size_t circuit_param_count() const { return circuit_params_; }
    /// Total parameter count; +2 when the scale is enabled.
    std::size_t param_count() const {
        return circuit_params_ + (scale_enabled_ ? 2 : 0);
    }
    std::size_t scale_r_slot() const { return circuit_params_; }
    std::size_t scale_phi_slot() const { return circuit_params_ + 1; }

    /// alpha(theta) = r*exp(i*phi), or 1 when the scale is disabled.
    Complex scale_factor(const std::vector<double> &theta) const;

    /// alpha(theta0) * R_N...R_1 |ref>.
    StateVector prepare(const std::vector<double> &theta) const;

    /// Exact analytic d|v>/d theta_k (generally unnormalized).
    StateVector derivative_state(const std::vector<double> &theta,
                                 std::size_t k) const;

    struct TangentFrame {
        StateVector state;                    ///< prepared state
        std::vector<StateVector> derivatives; ///< one per parameter slot
    };
    /// State plus every derivative vector in one forward sweep.
    TangentFrame tangent_frame(const std::vector<double> &theta) const;

    /// The preparation circuit at fixed angles.
    Circuit circuit(const std::vector<double> &theta) const;

    /// One summand of d|v>/d theta_k = sum_i weight_i * circuit_i |0...0>.
    struct DerivativeBranch {
        Complex weight;
        Circuit circuit;
    };
    std::vector<DerivativeBranch>
    derivative_branches(const std::vector<double> &theta, std::size_t k) const;

    /// Same ansatz with the scale toggled.
    Ansatz with_scale(bool enabled) const;

  private:
    void check_theta(const std::vector<double> &theta) const;

    StateVector reference_;
    std::vector<ParamGate> gates_;
    std::size_t circuit_params_;
    bool scale_enabled_;
};

/**
 * The six-qubit Hamiltonian-ansatz circuit for the 2D transverse-field
 * Ising lattice with bonds (5,6),(3,5),(4,6),(3,4),(1,3),(2,4),(1,2)
 * (1-indexed): six HA blocks of 7 grouped parameters interleaved with two
 * single-qubit R_X layers, 54 parameters in total.
 */
Ansatz build_hamiltonian_ansatz();

/// Layered single-Pauli-rotation ansatz dense enough to track arbitrary
/// states on 1-2 qubits; used by the small linear-algebra benchmarks.
Ansatz build_full_ansatz(std::size_t qubit_count, std::size_t layers = 3,
                         bool scale_enabled = false);

} // namespace vqsim
