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
 * Hadamard-test overlap primitive: a * Re(e^{i*theta} <0|U_left^dag U_right|0>),
 * evaluated exactly or through simulated ancilla measurement statistics.
 */

#pragma once

#include <cstdint>
#include <random>

#include "vqsim/circuit.hpp"

namespace vqsim {

/// Which hardware circuit template the task maps onto; fixes the number of
/// ancilla-controlled operations.
enum class CircuitTemplate {
    GatePairOverlap,     ///< R_{k,p}^dag R_{j,q} (two controlled insertions)
    GateInsertOverlap,   ///< R_{k,i}^dag sigma_j R (two controlled insertions)
    SandwichOverlap,     ///< R_{k,i}^dag sigma_l R_{j,q} (three)
    DistinctPrepOverlap, ///< U_t^dag sigma_l U_t' (three)
};

struct OverlapTask {
    Circuit left;
    Circuit right;
    double phase = 0.0; ///< theta
    double scale = 1.0; ///< a
    CircuitTemplate kind = CircuitTemplate::GatePairOverlap;
};

/// a * Re(e^{i*theta} <left|right>) by direct statevector contraction.
double exact_overlap(const OverlapTask &task);

struct SampledOverlap {
    double estimate;
    double std_error;
};

/**
 * Simulated ancilla protocol: P(ancilla = 0) = (1 + Re(e^{i*theta}<l|r>))/2.
 * Draws `shots` Bernoulli samples and returns a*(2*p_hat - 1) with the
 * binomial standard error a*2*sqrt(p_hat*(1 - p_hat)/shots).
 */
SampledOverlap sampled_overlap(const OverlapTask &task, std::uint64_t shots,
                               std::mt19937_64 &rng);
SampledOverlap sampled_overlap(const OverlapTask &task, std::uint64_t shots,
                               std::uint64_t seed);

/// Ancilla-controlled operation count of the hardware template.
int controlled_op_count(const OverlapTask &task);

} // namespace vqsim
