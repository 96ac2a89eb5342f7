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

#include "doctest.h"

#include <random>
#include <unsupported/Eigen/MatrixFunctions>

#include "vqsim/circuit.hpp"
#include "vqsim/oracles.hpp"

using namespace vqsim;

namespace {

StateVector random_state(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    std::vector<Complex> amps(std::size_t(1) << n);
    for (auto &a : amps)
        a = Complex(g(rng), g(rng));
    auto s = StateVector::from_amplitudes(n, std::move(amps));
    s.normalize();
    return s;
}

void check_exponential(const OperatorSum &generator, double angle,
                       const StateVector &state, double tol = 1e-10) {
    StateVector fast = state;
    apply_exponential(generator, angle, fast);
    Eigen::MatrixXcd g = to_dense(generator);
    Eigen::MatrixXcd u = (Complex(0.0, -angle) * g).exp();
    Eigen::VectorXcd dense = u * to_dense(state);
    for (std::size_t i = 0; i < fast.dimension(); ++i)
        CHECK(std::abs(fast.amplitude(i) -
                       dense(static_cast<Eigen::Index>(i))) < tol);
}

} // namespace

TEST_CASE("commutation detection") {
    CHECK(terms_commute(OperatorSum::parse("1.0*Z0 + 1.0*Z1", 2)));
    CHECK(terms_commute(OperatorSum::parse("1.0*X0 X1 + 1.0*Y0 Y1", 2)));
    CHECK(!terms_commute(OperatorSum::parse("1.0*X0 + 1.0*Z0", 2)));
}

TEST_CASE("exponential of commuting generators matches dense expm") {
    auto state = random_state(2, 21);
    check_exponential(OperatorSum::parse("0.7*Z0 + 0.3*Z1 + 0.2*Z0 Z1", 2),
                      0.9, state);
    check_exponential(OperatorSum::parse("0.5*X0 X1 - 0.25*Y0 Y1", 2), 1.3,
                      state);
}

TEST_CASE("exponential of non-commuting generators matches dense expm") {
    auto state = random_state(3, 22);
    check_exponential(
        OperatorSum::parse("0.8*X0 + 0.6*Z0 Z1 + 0.4*Y1 Y2 + 0.3*Z2", 3),
        1.7, state);
    // Large angle exercises the segmentation.
    check_exponential(OperatorSum::parse("1.0*X0 + 1.0*Z0", 1), 11.0,
                      random_state(1, 23));
}

TEST_CASE("circuit composition runs steps in order") {
    Circuit c(1);
    // H |0> is not expressible with one Pauli rotation; use
    // exp(-i pi/4 Y) |0> = (|0> + |1>)/sqrt(2), then Z flips the phase.
    c.add_gate(OperatorSum(PauliString::single(Pauli::Y, 0, 1)), M_PI / 4.0);
    c.add_pauli(PauliString::single(Pauli::Z, 0, 1));
    auto out = c.run();
    CHECK(std::abs(out.amplitude(0) - Complex(M_SQRT1_2)) < 1e-12);
    CHECK(std::abs(out.amplitude(1) - Complex(-M_SQRT1_2)) < 1e-12);
}

TEST_CASE("raw state step replaces the reference") {
    auto target = random_state(2, 31);
    Circuit c(2);
    c.add_raw_state(target);
    c.add_pauli(PauliString::single(Pauli::X, 0, 2));
    auto out = c.run();
    auto expect = apply(PauliString::single(Pauli::X, 0, 2), target);
    for (std::size_t i = 0; i < out.dimension(); ++i)
        CHECK(std::abs(out.amplitude(i) - expect.amplitude(i)) < 1e-13);
}

TEST_CASE("pauli step requires unit modulus coefficient") {
    Circuit c(1);
    CHECK_THROWS(c.add_pauli(PauliString::single(Pauli::X, 0, 1, 0.5)));
    // Unit-modulus complex phases are allowed.
    c.add_pauli(PauliString::single(Pauli::X, 0, 1, Complex(0.0, 1.0)));
}

TEST_CASE("run with explicit reference state") {
    auto ref = random_state(1, 41);
    Circuit c(1);
    c.add_gate(OperatorSum(PauliString::single(Pauli::X, 0, 1)), 0.4);
    auto through = c.run(ref);
    StateVector direct = ref;
    apply_exponential(OperatorSum(PauliString::single(Pauli::X, 0, 1)), 0.4,
                      direct);
    for (std::size_t i = 0; i < through.dimension(); ++i)
        CHECK(std::abs(through.amplitude(i) - direct.amplitude(i)) < 1e-13);
}
