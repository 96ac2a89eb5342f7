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
 * Pauli-string and Pauli-sum operator algebra.
 *
 * Qubit ordering convention used throughout the project: qubit 0 is the
 * least-significant bit of the computational-basis amplitude index.
 */

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace vqsim {

using Complex = std::complex<double>;

/// Single-qubit Pauli label.
enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);

/**
 * A weighted tensor product of single-qubit Pauli matrices over a fixed
 * number of qubits. Immutable after construction.
 */
class PauliString {
  public:
    PauliString(Complex coefficient, std::vector<Pauli> factors);

    static PauliString identity(std::size_t qubit_count, Complex c = 1.0);
    /// Single Pauli `p` acting on `qubit`, identity elsewhere.
    static PauliString single(Pauli p, std::size_t qubit,
                              std::size_t qubit_count, Complex c = 1.0);

    std::size_t qubit_count() const { return factors_.size(); }
    Complex coefficient() const { return coefficient_; }
    const std::vector<Pauli> &factors() const { return factors_; }

    bool is_identity() const;
    /// Adjoint: each Pauli factor is Hermitian, so only the coefficient
    /// is conjugated.
    PauliString adjoint() const;
    PauliString scaled(Complex c) const { return {coefficient_ * c, factors_}; }

    /// Bit masks used by the fast statevector kernel.
    std::uint64_t flip_mask() const { return flip_mask_; }   // X and Y sites
    std::uint64_t phase_mask() const { return phase_mask_; } // Y and Z sites
    /// coefficient * i^(#Y); the per-basis-state sign comes from phase_mask.
    Complex kernel_coefficient() const { return kernel_coefficient_; }

    std::string to_string() const;

    friend PauliString operator*(const PauliString &a, const PauliString &b);

  private:
    Complex coefficient_;
    std::vector<Pauli> factors_;
    std::uint64_t flip_mask_ = 0;
    std::uint64_t phase_mask_ = 0;
    Complex kernel_coefficient_;
};

/**
 * A linear combination of PauliStrings over a fixed qubit count, kept
 * canonical: terms are sorted by factor labels, duplicates merged, and
 * terms with |coefficient| < 1e-14 dropped.
 */
class OperatorSum {
  public:
    explicit OperatorSum(std::size_t qubit_count);
    OperatorSum(std::size_t qubit_count, std::vector<PauliString> terms);
    explicit OperatorSum(const PauliString &term);

    /**
     * Parse the operator literal format used in configs, e.g.
     * "0.25*Z0 Z1 + 1.0*X3 - 0.5i*Y2". Pauli letters are case-insensitive,
     * the qubit index suffix is mandatory except for a bare identity "I".
     * Indices >= qubit_count are rejected.
     */
    static OperatorSum parse(const std::string &text, std::size_t qubit_count);

    std::size_t qubit_count() const { return qubit_count_; }
    const std::vector<PauliString> &terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_identity(double tol = 1e-12) const;

    OperatorSum adjoint() const;
    bool is_hermitian(double tol = 1e-10) const;

    std::string to_string() const;

    friend OperatorSum operator+(const OperatorSum &a, const OperatorSum &b);
    friend OperatorSum operator-(const OperatorSum &a, const OperatorSum &b);
    friend OperatorSum operator*(const OperatorSum &a, const OperatorSum &b);
    friend OperatorSum operator*(Complex c, const OperatorSum &a);

  private:
    void canonicalize();

    std::size_t qubit_count_;
    std::vector<PauliString> terms_;
};

/// |1><0| on `qubit` (the raising operator), (X - iY)/2.
OperatorSum raising_op(std::size_t qubit, std::size_t qubit_count);
/// |0><1| on `qubit`, (X + iY)/2.
OperatorSum lowering_op(std::size_t qubit, std::size_t qubit_count);
/// |b><b| on `qubit`, (I +- Z)/2.
OperatorSum projector(int bit, std::size_t qubit, std::size_t qubit_count);

} // namespace vqsim
