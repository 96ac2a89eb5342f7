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

#include "vqsim/circuit.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace vqsim {

namespace {

bool strings_commute(const PauliString &a, const PauliString &b) {
    // Two Pauli strings commute iff they anticommute on an even number of
    // sites. Sites anticommute when both factors are non-identity and differ.
    int odd = 0;
    const auto &fa = a.factors();
    const auto &fb = b.factors();
    for (std::size_t q = 0; q < fa.size(); ++q)
        if (fa[q] != Pauli::I && fb[q] != Pauli::I && fa[q] != fb[q])
            ++odd;
    return (odd & 1) == 0;
}

} // namespace

bool terms_commute(const OperatorSum &op) {
    const auto &t = op.terms();
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j)
            if (!strings_commute(t[i], t[j]))
                return false;
    return true;
}

void apply_exponential(const OperatorSum &generator, double angle,
                       StateVector &state) {
    if (generator.is_zero() || angle == 0.0)
        return;
    if (!generator.is_hermitian())
        throw std::invalid_argument(
            "apply_exponential: generator must be Hermitian");
    if (terms_commute(generator)) {
        for (const auto &term : generator.terms())
            apply_pauli_rotation(term, angle, state);
        return;
    }
    // Segmented Taylor series for non-commuting generators.
    double weight = 0.0;
    for (const auto &term : generator.terms())
        weight += std::abs(term.coefficient());
    int segments = std::max(1, static_cast<int>(std::ceil(
                                   2.0 * std::abs(angle) * weight)));
    const Complex step_factor =
        Complex(0.0, -angle / static_cast<double>(segments));
    for (int s = 0; s < segments; ++s) {
        StateVector acc = state;
        StateVector w = state;
        for (int k = 1; k <= 40; ++k) {
            StateVector next = apply(generator, w);
            next.scale(step_factor / static_cast<double>(k));
            acc.add_scaled(1.0, next);
            w = std::move(next);
            if (w.norm() < 1e-18 * acc.norm())
                break;
        }
        state = std::move(acc);
    }
}

void Circuit::add_gate(OperatorSum generator, double angle) {
    if (generator.qubit_count() != qubit_count_)
        throw std::invalid_argument("Circuit: gate qubit count mismatch");
    steps_.emplace_back(GateStep{std::move(generator), angle});
}

void Circuit::add_pauli(PauliString pauli) {
    if (pauli.qubit_count() != qubit_count_)
        throw std::invalid_argument("Circuit: pauli qubit count mismatch");
    if (std::abs(std::abs(pauli.coefficient()) - 1.0) > 1e-12)
        throw std::invalid_argument("Circuit: pauli insertion must be unitary");
    steps_.emplace_back(PauliStep{std::move(pauli)});
}

void Circuit::add_raw_state(StateVector state) {
    if (state.qubit_count() != qubit_count_)
        throw std::invalid_argument("Circuit: raw state qubit count mismatch");
    steps_.emplace_back(RawStateStep{std::move(state)});
}

StateVector Circuit::run() const { return run(StateVector(qubit_count_)); }

StateVector Circuit::run(const StateVector &reference) const {
    if (reference.qubit_count() != qubit_count_)
        throw std::invalid_argument("Circuit: reference qubit count mismatch");
    StateVector state = reference;
    for (const auto &step : steps_) {
        if (const auto *g = std::get_if<GateStep>(&step)) {
            apply_exponential(g->generator, g->angle, state);
        } else if (const auto *p = std::get_if<PauliStep>(&step)) {
            state = apply(p->pauli, state);
        } else {
            state = std::get<RawStateStep>(step).state;
        }
    }
    return state;
}

} // namespace vqsim
