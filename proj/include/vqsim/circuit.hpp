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
 * Unitary circuit descriptions used by the overlap estimator: ordered
 * sequences of exponential gates and inserted Pauli unitaries.
 */

#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "vqsim/pauli.hpp"
#include "vqsim/statevector.hpp"

namespace vqsim {

/// In-place state <- exp(-i*angle*generator)|state>. The generator must be
/// Hermitian with real Pauli coefficients. Commuting generators factor into
/// exact Pauli rotations; the general case falls back to a segmented Taylor
/// series converged to machine precision.
void apply_exponential(const OperatorSum &generator, double angle,
                       StateVector &state);

/// True when every pair of terms commutes.
bool terms_commute(const OperatorSum &op);

struct GateStep {
    OperatorSum generator;
    double angle;
};

/// A unitary Pauli insertion (coefficient must have modulus 1).
struct PauliStep {
    PauliString pauli;
};

/// A state prepared outside the circuit formalism (replaces the reference).
struct RawStateStep {
    StateVector state;
};

using CircuitStep = std::variant<GateStep, PauliStep, RawStateStep>;

class Circuit {
  public:
    explicit Circuit(std::size_t qubit_count) : qubit_count_(qubit_count) {}

    std::size_t qubit_count() const { return qubit_count_; }
    const std::vector<CircuitStep> &steps() const { return steps_; }

    void add_gate(OperatorSum generator, double angle);
    void add_pauli(PauliString pauli);
    void add_raw_state(StateVector state);

    /// Run the circuit on |0...0>.
    StateVector run() const;
    /// Run the circuit on an explicit reference state.
    StateVector run(const StateVector &reference) const;

  private:
    std::size_t qubit_count_;
    std::vector<CircuitStep> steps_;
};

} // namespace vqsim
