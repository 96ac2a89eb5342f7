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

#include "vqsim/ansatz.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace vqsim {

namespace {

const Complex kImag(0.0, 1.0);

void check_gate(const ParamGate &gate, std::size_t qubit_count) {
    if (gate.generator.qubit_count() != qubit_count)
        throw std::invalid_argument("Ansatz: gate qubit count mismatch");
    if (!gate.generator.is_hermitian())
        throw std::invalid_argument("Ansatz: gate generator must be Hermitian");
    if (gate.generator.is_zero())
        throw std::invalid_argument("Ansatz: gate generator is zero");
}

} // namespace

Ansatz::Ansatz(StateVector reference, std::vector<ParamGate> gates,
               bool scale_enabled)
    : reference_(std::move(reference)), gates_(std::move(gates)),
      scale_enabled_(scale_enabled) {
    std::size_t max_slot = 0;
    for (const auto &g : gates_) {
        check_gate(g, reference_.qubit_count());
        max_slot = std::max(max_slot, g.slot + 1);
    }
    circuit_params_ = max_slot;
    // Every slot below the maximum must drive at least one gate.
    std::vector<char> used(circuit_params_, 0);
    for (const auto &g : gates_)
        used[g.slot] = 1;
    for (std::size_t s = 0; s < circuit_params_; ++s)
        if (!used[s])
            throw std::invalid_argument("Ansatz: unused parameter slot");
}

void Ansatz::check_theta(const std::vector<double> &theta) const {
    if (theta.size() != param_count())
        throw std::invalid_argument("Ansatz: parameter vector length mismatch");
    if (scale_enabled_ && theta[scale_r_slot()] <= 0.0)
        throw std::invalid_argument("Ansatz: scale radius must be positive");
}

Complex Ansatz::scale_factor(const std::vector<double> &theta) const {
    if (!scale_enabled_)
        return 1.0;
    return theta[scale_r_slot()] *
           std::exp(kImag * theta[scale_phi_slot()]);
}

StateVector Ansatz::prepare(const std::vector<double> &theta) const {
    check_theta(theta);
    StateVector state = reference_;
    for (const auto &g : gates_)
        apply_exponential(g.generator, theta[g.slot], state);
    if (scale_enabled_)
        state.scale(scale_factor(theta));
    return state;
}

Ansatz::TangentFrame
Ansatz::tangent_frame(const std::vector<double> &theta) const {
    check_theta(theta);
    const std::size_t n_params = param_count();
    StateVector cur = reference_;
    // One tangent vector per gate, propagated through the remaining gates.
    std::vector<StateVector> gate_tangents;
    gate_tangents.reserve(gates_.size());
    for (const auto &g : gates_) {
        const double angle = theta[g.slot];
        for (auto &t : gate_tangents)
            apply_exponential(g.generator, angle, t);
        apply_exponential(g.generator, angle, cur);
        StateVector t = apply(g.generator, cur);
        t.scale(-kImag);
        gate_tangents.push_back(std::move(t));
    }

    TangentFrame frame{cur, {}};
    frame.derivatives.assign(n_params, StateVector(qubit_count()));
    for (auto &d : frame.derivatives)
        d.scale(0.0);
    for (std::size_t g = 0; g < gates_.size(); ++g)
        frame.derivatives[gates_[g].slot].add_scaled(1.0, gate_tangents[g]);

    if (scale_enabled_) {
        const Complex alpha = scale_factor(theta);
        const Complex phase = std::exp(kImag * theta[scale_phi_slot()]);
        for (std::size_t s = 0; s < circuit_params_; ++s)
            frame.derivatives[s].scale(alpha);
        frame.derivatives[scale_r_slot()] = cur;
        frame.derivatives[scale_r_slot()].scale(phase);
        frame.derivatives[scale_phi_slot()] = cur;
        frame.derivatives[scale_phi_slot()].scale(kImag * alpha);
        frame.state.scale(alpha);
    }
    return frame;
}

StateVector Ansatz::derivative_state(const std::vector<double> &theta,
                                     std::size_t k) const {
    check_theta(theta);
    if (k >= param_count())
        throw std::out_of_range("derivative_state: parameter index out of range");
    if (scale_enabled_ && k >= circuit_params_) {
        StateVector phi = reference_;
        for (const auto &g : gates_)
            apply_exponential(g.generator, theta[g.slot], phi);
        const Complex phase = std::exp(kImag * theta[scale_phi_slot()]);
        if (k == scale_r_slot()) {
            phi.scale(phase);
        } else {
            phi.scale(kImag * theta[scale_r_slot()] * phase);
        }
        return phi;
    }
    StateVector cur = reference_;
    StateVector acc(qubit_count());
    acc.scale(0.0);
    bool started = false;
    for (const auto &g : gates_) {
        const double angle = theta[g.slot];
        if (started)
            apply_exponential(g.generator, angle, acc);
        apply_exponential(g.generator, angle, cur);
        if (g.slot == k) {
            StateVector t = apply(g.generator, cur);
            acc.add_scaled(-kImag, t);
            started = true;
        }
    }
    if (scale_enabled_)
        acc.scale(scale_factor(theta));
    return acc;
}

Circuit Ansatz::circuit(const std::vector<double> &theta) const {
    check_theta(theta);
    Circuit c(qubit_count());
    if (reference_.amplitude(0) != Complex(1.0))
        c.add_raw_state(reference_);
    for (const auto &g : gates_)
        c.add_gate(g.generator, theta[g.slot]);
    return c;
}

std::vector<Ansatz::DerivativeBranch>
Ansatz::derivative_branches(const std::vector<double> &theta,
                            std::size_t k) const {
    check_theta(theta);
    if (k >= param_count())
        throw std::out_of_range(
            "derivative_branches: parameter index out of range");
    std::vector<DerivativeBranch> branches;
    const Complex alpha = scale_factor(theta);
    if (scale_enabled_ && k >= circuit_params_) {
        const Complex phase = std::exp(kImag * theta[scale_phi_slot()]);
        Complex weight = (k == scale_r_slot())
                             ? phase
                             : kImag * theta[scale_r_slot()] * phase;
        branches.push_back({weight, circuit(theta)});
        return branches;
    }
    for (std::size_t g = 0; g < gates_.size(); ++g) {
        if (gates_[g].slot != k)
            continue;
        for (const auto &term : gates_[g].generator.terms()) {
            Circuit c(qubit_count());
            if (reference_.amplitude(0) != Complex(1.0))
                c.add_raw_state(reference_);
            for (std::size_t h = 0; h < gates_.size(); ++h) {
                c.add_gate(gates_[h].generator, theta[gates_[h].slot]);
                if (h == g)
                    c.add_pauli(PauliString(1.0, term.factors()));
            }
            // g_{k,i} = -i * c_i, times alpha for the unnormalized state.
            branches.push_back(
                {-kImag * term.coefficient() * alpha, std::move(c)});
        }
    }
    return branches;
}

Ansatz Ansatz::with_scale(bool enabled) const {
    return Ansatz(reference_, gates_, enabled);
}

Ansatz build_hamiltonian_ansatz() {
    const std::size_t n = 6;
    auto zz = [&](std::size_t a, std::size_t b) {
        return OperatorSum(PauliString(1.0, [&] {
            std::vector<Pauli> f(n, Pauli::I);
            f[a] = Pauli::Z;
            f[b] = Pauli::Z;
            return f;
        }()));
    };
    auto x = [&](std::size_t q) {
        return OperatorSum(PauliString::single(Pauli::X, q, n));
    };

    std::vector<ParamGate> gates;
    std::size_t slot = 0;
    auto ha_block = [&] {
        gates.push_back({zz(4, 5), slot++});
        gates.push_back({zz(2, 4) + zz(3, 5), slot++});
        gates.push_back({zz(2, 3), slot++});
        gates.push_back({zz(0, 2) + zz(1, 3), slot++});
        gates.push_back({zz(0, 1), slot++});
        gates.push_back({x(2) + x(3), slot++});
        gates.push_back({x(0) + x(1) + x(4) + x(5), slot++});
    };
    auto rx_layer = [&] {
        for (std::size_t q = 0; q < n; ++q)
            gates.push_back({x(q), slot++});
    };
    ha_block();
    ha_block();
    ha_block();
    rx_layer();
    ha_block();
    ha_block();
    ha_block();
    rx_layer();
    return Ansatz(StateVector(n), std::move(gates));
}

Ansatz build_full_ansatz(std::size_t qubit_count, std::size_t layers,
                         bool scale_enabled) {
    if (qubit_count == 0 || qubit_count > 4)
        throw std::invalid_argument("build_full_ansatz: 1-4 qubits supported");
    std::vector<ParamGate> gates;
    std::size_t slot = 0;
    auto single = [&](Pauli p, std::size_t q) {
        gates.push_back(
            {OperatorSum(PauliString::single(p, q, qubit_count)), slot++});
    };
    auto pair = [&](Pauli p, std::size_t a, std::size_t b) {
        std::vector<Pauli> f(qubit_count, Pauli::I);
        f[a] = p;
        f[b] = p;
        gates.push_back({OperatorSum(PauliString(1.0, std::move(f))), slot++});
    };
    for (std::size_t layer = 0; layer < layers; ++layer) {
        for (std::size_t q = 0; q < qubit_count; ++q) {
            single(Pauli::Z, q);
            single(Pauli::X, q);
            single(Pauli::Y, q);
        }
        for (std::size_t a = 0; a < qubit_count; ++a)
            for (std::size_t b = a + 1; b < qubit_count; ++b) {
                pair(Pauli::X, a, b);
                pair(Pauli::Y, a, b);
                pair(Pauli::Z, a, b);
            }
    }
    return Ansatz(StateVector(qubit_count), std::move(gates), scale_enabled);
}

} // namespace vqsim
