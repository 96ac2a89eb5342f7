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

#include "vqsim/resources.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vqsim {

namespace {

std::uint64_t ceil_count(double value) {
    if (!(value >= 0.0))
        throw std::invalid_argument("resource estimate: negative count");
    return static_cast<std::uint64_t>(std::ceil(value));
}

} // namespace

void CostInputs::validate() const {
    for (double eps : {eps_i, eps_a, eps_d})
        if (!(eps > 0.0) || !(eps < 1.0))
            throw std::invalid_argument(
                "CostInputs: accuracies must lie in (0, 1)");
    for (std::uint64_t count : {n_p, n_d, n_b, n_bdb, n_aj, n_aj_terms, n_h})
        if (count < 1)
            throw std::invalid_argument("CostInputs: counts must be >= 1");
    for (double norm : {b_norm_max, delta_max, delta3_max})
        if (!(norm >= 0.0))
            throw std::invalid_argument("CostInputs: norms must be >= 0");
    for (double norm : l_infinity_norms)
        if (!(norm >= 0.0))
            throw std::invalid_argument("CostInputs: norms must be >= 0");
}

std::uint64_t shots_per_term(const CostInputs &inputs) {
    if (!(inputs.eps_i > 0.0))
        throw std::invalid_argument("shots_per_term: eps_I must be positive");
    return ceil_count(inputs.b_norm_max * inputs.delta_max * inputs.delta_max *
                      inputs.duration * inputs.duration /
                      (inputs.eps_i * inputs.eps_i));
}

StepBudget steps_required(const CostInputs &inputs) {
    if (!(inputs.eps_a > 0.0))
        throw std::invalid_argument("steps_required: eps_A must be positive");
    double t = inputs.duration;
    std::uint64_t steps = ceil_count(inputs.delta3_max * t * t * t /
                                     (inputs.eps_a * inputs.eps_a));
    double dt = inputs.eps_a * inputs.eps_a / (inputs.delta3_max * t * t);
    return {std::max<std::uint64_t>(steps, 1), dt};
}

std::uint64_t circuits_per_step(const CostInputs &inputs) {
    const auto p = inputs.n_p, d = inputs.n_d, b = inputs.n_b,
               bdb = inputs.n_bdb, aj = inputs.n_aj, ajt = inputs.n_aj_terms;
    return bdb * p * p * d * d + 2 * b * d * p + bdb +
           b * aj * ajt * (p * d + 1);
}

std::uint64_t total_measurements(const CostInputs &inputs, bool svd) {
    if (!svd)
        return shots_per_term(inputs) * steps_required(inputs).steps *
               circuits_per_step(inputs);
    if (!(inputs.eps_a > inputs.eps_d))
        throw std::invalid_argument(
            "total_measurements: SVD mode needs eps_A > eps_D");
    double t5 = std::pow(inputs.svd_duration, 5);
    double gap = inputs.eps_a - inputs.eps_d;
    double circuits =
        static_cast<double>(inputs.n_p) * inputs.n_p * inputs.n_d * inputs.n_d +
        static_cast<double>(inputs.n_p) * inputs.n_h * inputs.n_d;
    return ceil_count(inputs.b_norm_max * inputs.delta_max * inputs.delta_max *
                      inputs.delta3_max * t5 /
                      (gap * gap * inputs.eps_i * inputs.eps_i) * circuits);
}

JumpBudget jump_budget(const CostInputs &inputs) {
    double sum = 0.0, top = 0.0;
    for (double norm : inputs.l_infinity_norms) {
        sum += norm;
        top = std::max(top, norm);
    }
    return {inputs.duration * sum, inputs.duration * top};
}

double alpha_for_accuracy(double c, double eps_d) {
    if (!(c > 0.0) || !(eps_d > 0.0))
        throw std::invalid_argument(
            "alpha_for_accuracy: C and eps_D must be positive");
    return std::log(2.0 / (c * eps_d)) / 2.0;
}

} // namespace vqsim
