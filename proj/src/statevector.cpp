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

#include "vqsim/statevector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace vqsim {

namespace {

void check_match(const StateVector &s, std::size_t qubit_count,
                 const char *what) {
    if (s.qubit_count() != qubit_count)
        throw std::invalid_argument(std::string(what) +
                                    ": qubit count mismatch");
}

} // namespace

StateVector::StateVector(std::size_t qubit_count)
    : qubit_count_(qubit_count),
      amplitudes_(std::size_t{1} << qubit_count, Complex(0.0)) {
    if (qubit_count == 0 || qubit_count > 24)
        throw std::invalid_argument("StateVector: unsupported qubit count");
    amplitudes_[0] = 1.0;
}

StateVector StateVector::basis_state(std::size_t qubit_count,
                                     std::uint64_t index) {
    StateVector s(qubit_count);
    if (index >= s.dimension())
        throw std::invalid_argument("basis_state: index out of range");
    s.amplitudes_[0] = 0.0;
    s.amplitudes_[index] = 1.0;
    return s;
}

StateVector StateVector::from_amplitudes(std::size_t qubit_count,
                                         std::vector<Complex> amplitudes) {
    StateVector s(qubit_count);
    if (amplitudes.size() != s.dimension())
        throw std::invalid_argument(
            "from_amplitudes: length is not 2^qubit_count");
    s.amplitudes_ = std::move(amplitudes);
    return s;
}

double StateVector::norm_squared() const {
    double acc = 0.0;
    for (const auto &a : amplitudes_)
        acc += std::norm(a);
    return acc;
}

double StateVector::norm() const { return std::sqrt(norm_squared()); }

void StateVector::normalize() {
    double n = norm();
    if (n < 1e-154)
        throw std::runtime_error("normalize: zero state");
    double inv = 1.0 / n;
    for (auto &a : amplitudes_)
        a *= inv;
}

void StateVector::scale(Complex c) {
    for (auto &a : amplitudes_)
        a *= c;
}

void StateVector::add_scaled(Complex c, const StateVector &other) {
    check_match(other, qubit_count_, "add_scaled");
    for (std::size_t i = 0; i < amplitudes_.size(); ++i)
        amplitudes_[i] += c * other.amplitudes_[i];
}

Complex inner(const StateVector &a, const StateVector &b) {
    check_match(b, a.qubit_count(), "inner");
    Complex acc = 0.0;
    const Complex *pa = a.data();
    const Complex *pb = b.data();
    for (std::size_t i = 0; i < a.dimension(); ++i)
        acc += std::conj(pa[i]) * pb[i];
    return acc;
}

void apply_accumulate(const PauliString &term, const StateVector &state,
                      StateVector &out) {
    check_match(state, term.qubit_count(), "apply");
    check_match(out, term.qubit_count(), "apply");
    const std::uint64_t flip = term.flip_mask();
    const std::uint64_t phase = term.phase_mask();
    const Complex c = term.kernel_coefficient();
    const Complex *in = state.data();
    Complex *dst = out.data();
    const std::size_t dim = state.dimension();
    for (std::uint64_t i = 0; i < dim; ++i) {
        Complex v = c * in[i];
        if (std::popcount(i & phase) & 1)
            v = -v;
        dst[i ^ flip] += v;
    }
}

StateVector apply(const PauliString &term, const StateVector &state) {
    StateVector out(state.qubit_count());
    out.scale(0.0);
    apply_accumulate(term, state, out);
    return out;
}

StateVector apply(const OperatorSum &op, const StateVector &state) {
    check_match(state, op.qubit_count(), "apply");
    StateVector out(state.qubit_count());
    out.scale(0.0);
    for (const auto &term : op.terms())
        apply_accumulate(term, state, out);
    return out;
}

Complex expectation(const PauliString &term, const StateVector &state) {
    check_match(state, term.qubit_count(), "expectation");
    const std::uint64_t flip = term.flip_mask();
    const std::uint64_t phase = term.phase_mask();
    const Complex c = term.kernel_coefficient();
    const Complex *in = state.data();
    Complex acc = 0.0;
    const std::size_t dim = state.dimension();
    for (std::uint64_t i = 0; i < dim; ++i) {
        Complex v = std::conj(in[i ^ flip]) * in[i];
        if (std::popcount(i & phase) & 1)
            v = -v;
        acc += v;
    }
    return c * acc;
}

Complex expectation(const OperatorSum &op, const StateVector &state) {
    Complex acc = 0.0;
    for (const auto &term : op.terms())
        acc += expectation(term, state);
    return acc;
}

void apply_pauli_rotation(const PauliString &term, double angle,
                          StateVector &state) {
    check_match(state, term.qubit_count(), "apply_pauli_rotation");
    if (std::abs(term.coefficient().imag()) > 1e-12)
        throw std::invalid_argument(
            "apply_pauli_rotation: generator coefficient must be real");
    const double weight = term.coefficient().real();
    const double cs = std::cos(angle * weight);
    const Complex ms(0.0, -std::sin(angle * weight));
    // Bare Pauli phase: kernel coefficient with the weight divided out.
    const Complex bare = term.kernel_coefficient() / term.coefficient();
    const Complex f = ms * bare;
    const std::uint64_t flip = term.flip_mask();
    const std::uint64_t phase = term.phase_mask();
    Complex *a = state.data();
    const std::size_t dim = state.dimension();
    if (flip == 0) {
        // Diagonal rotation.
        for (std::uint64_t i = 0; i < dim; ++i) {
            Complex v = f * a[i];
            if (std::popcount(i & phase) & 1)
                v = -v;
            a[i] = cs * a[i] + v;
        }
        return;
    }
    for (std::uint64_t i = 0; i < dim; ++i) {
        std::uint64_t j = i ^ flip;
        if (j < i)
            continue;
        Complex vi = f * a[i];
        Complex vj = f * a[j];
        if (std::popcount(i & phase) & 1)
            vi = -vi;
        if (std::popcount(j & phase) & 1)
            vj = -vj;
        a[j] = cs * a[j] + vi;
        a[i] = cs * a[i] + vj;
    }
}

} // namespace vqsim
