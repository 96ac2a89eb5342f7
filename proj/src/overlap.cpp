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

#include "vqsim/overlap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vqsim {

namespace {

double real_part(const OverlapTask &task) {
    if (task.left.qubit_count() != task.right.qubit_count())
        throw std::invalid_argument("overlap: qubit count mismatch");
    Complex z = inner(task.left.run(), task.right.run());
    return (std::exp(Complex(0.0, task.phase)) * z).real();
}

} // namespace

double exact_overlap(const OverlapTask &task) {
    return task.scale * real_part(task);
}

SampledOverlap sampled_overlap(const OverlapTask &task, std::uint64_t shots,
                               std::mt19937_64 &rng) {
    if (shots == 0)
        throw std::invalid_argument("sampled_overlap: zero shots");
    // The ancilla outcome distribution is fully determined by the exact
    // amplitude; sample it directly instead of simulating the extra qubit.
    double re = real_part(task);
    double p = std::clamp(0.5 * (1.0 + re), 0.0, 1.0);
    std::binomial_distribution<std::uint64_t> dist(shots, p);
    double p_hat = static_cast<double>(dist(rng)) / static_cast<double>(shots);
    double estimate = task.scale * (2.0 * p_hat - 1.0);
    double std_error = std::abs(task.scale) * 2.0 *
                       std::sqrt(p_hat * (1.0 - p_hat) /
                                 static_cast<double>(shots));
    return {estimate, std_error};
}

SampledOverlap sampled_overlap(const OverlapTask &task, std::uint64_t shots,
                               std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return sampled_overlap(task, shots, rng);
}

int controlled_op_count(const OverlapTask &task) {
    switch (task.kind) {
    case CircuitTemplate::GatePairOverlap:
    case CircuitTemplate::GateInsertOverlap:
        return 2;
    case CircuitTemplate::SandwichOverlap:
    case CircuitTemplate::DistinctPrepOverlap:
        return 3;
    }
    throw std::invalid_argument("controlled_op_count: unclassifiable task");
}

} // namespace vqsim
