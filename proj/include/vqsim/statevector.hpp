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
 * Dense complex statevector and its Pauli-sum kernels. Qubit 0 is the
 * least-significant bit of the amplitude index.
 */

#pragma once

#include <cstdint>
#include <vector>

#include "vqsim/pauli.hpp"

namespace vqsim {

class StateVector {
  public:
    /// |0...0> on `qubit_count` qubits.
    explicit StateVector(std::size_t qubit_count);

    static StateVector basis_state(std::size_t qubit_count,
                                   std::uint64_t index);
    static StateVector from_amplitudes(std::size_t qubit_count,
                                       std::vector<Complex> amplitudes);

    std::size_t qubit_count() const { return qubit_count_; }
    std::size_t dimension() const { return amplitudes_.size(); }
    const std::vector<Complex> &amplitudes() const { return amplitudes_; }
    Complex amplitude(std::uint64_t index) const { return amplitudes_[index]; }

    double norm() const;
    double norm_squared() const;
    /// In-place rescale to unit norm; throws on (numerically) zero state.
    void normalize();

    void scale(Complex c);
    /// this += c * other
    void add_scaled(Complex c, const StateVector &other);

    Complex *data() { return amplitudes_.data(); }
    const Complex *data() const { return amplitudes_.data(); }

  private:
    std::size_t qubit_count_;
    std::vector<Complex> amplitudes_;
};

/// <a|b>, conjugate-linear in `a`.
Complex inner(const StateVector &a, const StateVector &b);

/// op|state>; the input is left unmodified, the output is generally
/// unnormalized.
StateVector apply(const OperatorSum &op, const StateVector &state);
StateVector apply(const PauliString &term, const StateVector &state);

/// out += term|state>, without allocating.
void apply_accumulate(const PauliString &term, const StateVector &state,
                      StateVector &out);

/// <state|op|state>.
Complex expectation(const OperatorSum &op, const StateVector &state);
/// <state|sigma|state> for a single Pauli string (coefficient included).
Complex expectation(const PauliString &term, const StateVector &state);

/// In-place exp(-i*angle*c*sigma)|state> for one Pauli term with real
/// weight c (sigma^2 = I makes this an exact rotation).
void apply_pauli_rotation(const PauliString &term, double angle,
                          StateVector &state);

} // namespace vqsim
