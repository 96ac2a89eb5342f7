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

#include <cmath>

#include "vqsim/resources.hpp"

using namespace vqsim;

TEST_CASE("shots_per_term arithmetic and scaling") {
    CostInputs in;
    in.b_norm_max = 1.0;
    in.delta_max = 10.0;
    in.duration = 1.0;
    in.eps_i = 0.1;
    CHECK(shots_per_term(in) == 10000);

    in.eps_i = 0.05; // halved accuracy -> 4x shots
    CHECK(shots_per_term(in) == 40000);

    in.eps_i = 0.1;
    in.duration = 2.0; // doubled time -> 4x shots
    CHECK(shots_per_term(in) == 40000);
}

TEST_CASE("steps_required arithmetic and scaling") {
    CostInputs in;
    in.delta3_max = 1.0;
    in.duration = 1.0;
    in.eps_a = 0.1;
    auto budget = steps_required(in);
    CHECK(budget.steps == 100);
    CHECK(budget.step == doctest::Approx(0.01));

    in.duration = 2.0; // cubic in T
    CHECK(steps_required(in).steps == 800);

    in.duration = 1.0;
    in.eps_a = 1.0; // boundary of the formula: a single step
    CHECK(steps_required(in).steps == 1);
}

TEST_CASE("circuits_per_step arithmetic") {
    CostInputs ones;
    CHECK(circuits_per_step(ones) == 6); // 1 + 2 + 1 + 2

    CostInputs fig2;
    fig2.n_p = 54;
    CHECK(circuits_per_step(fig2) == 54ull * 54 + 2 * 54 + 1 + 55);
    CHECK(circuits_per_step(fig2) == 3080);
}

TEST_CASE("total_measurements factorization identity") {
    CostInputs in;
    in.b_norm_max = 2.0;
    in.delta_max = 3.0;
    in.delta3_max = 1.5;
    in.duration = 2.0;
    in.eps_i = 0.25;
    in.eps_a = 0.25;
    in.n_p = 7;
    in.n_d = 2;
    CHECK(total_measurements(in, false) ==
          shots_per_term(in) * steps_required(in).steps *
              circuits_per_step(in));
}

TEST_CASE("plain total scales as eps^-4 under eps_I = eps_A = eps/2") {
    auto total_at = [](double eps) {
        CostInputs in;
        // Values chosen so the per-factor results are exact integers and
        // ceiling rounding does not distort the ratio.
        in.b_norm_max = 1.0;
        in.delta_max = 1.0;
        in.delta3_max = 1.0;
        in.duration = 1.0;
        in.eps_i = eps / 2.0;
        in.eps_a = eps / 2.0;
        return total_measurements(in, false);
    };
    CHECK(total_at(0.1) == 16 * total_at(0.2));
}

TEST_CASE("svd total and its pole guard") {
    CostInputs in;
    in.eps_a = 0.2;
    in.eps_d = 0.1;
    in.svd_duration = 2.0;
    in.n_p = 3;
    in.n_h = 2;
    double expect = 1.0 * 1.0 * 1.0 * std::pow(2.0, 5) /
                    (0.1 * 0.1 * in.eps_i * in.eps_i) * (9.0 + 6.0);
    CHECK(total_measurements(in, true) ==
          static_cast<std::uint64_t>(std::ceil(expect)));

    in.eps_d = 0.2; // eps_A == eps_D -> divergence guard
    CHECK_THROWS(total_measurements(in, true));
}

TEST_CASE("jump budget") {
    CostInputs in;
    in.duration = 6.0;
    in.l_infinity_norms = {1.0, 1.0, 1.0, 1.0, 1.0, 1.0};
    auto budget = jump_budget(in);
    CHECK(budget.bound == doctest::Approx(36.0));
    CHECK(budget.local_bound == doctest::Approx(6.0));

    in.l_infinity_norms.clear();
    CHECK(jump_budget(in).bound == 0.0);
}

TEST_CASE("alpha inverse identity") {
    CHECK(alpha_for_accuracy(1.0, 2.0) == doctest::Approx(0.0));
    double alpha = alpha_for_accuracy(0.5, 1e-3);
    CHECK(alpha == doctest::Approx(0.5 * std::log(4000.0)));
    CHECK(alpha == doctest::Approx(4.146).epsilon(1e-3));
    // 2 e^{-2 alpha} / C returns eps_D exactly.
    CHECK(2.0 * std::exp(-2.0 * alpha) / 0.5 == doctest::Approx(1e-3));
    CHECK_THROWS(alpha_for_accuracy(0.0, 0.1));
}

TEST_CASE("monotonicity in T and accuracies") {
    CostInputs in;
    in.delta_max = 2.0;
    in.delta3_max = 2.0;
    in.eps_i = 0.2;
    in.eps_a = 0.2;
    auto base = total_measurements(in, false);
    CostInputs longer = in;
    longer.duration = 2.0;
    CHECK(total_measurements(longer, false) >= base);
    CostInputs looser = in;
    looser.eps_i = 0.4;
    looser.eps_a = 0.4;
    CHECK(total_measurements(looser, false) <= base);
}

TEST_CASE("input validation") {
    CostInputs in;
    CHECK_NOTHROW(in.validate());
    in.eps_i = 0.0;
    CHECK_THROWS(in.validate());
    in.eps_i = 0.5;
    in.n_p = 0;
    CHECK_THROWS(in.validate());
    in.n_p = 1;
    in.delta_max = -1.0;
    CHECK_THROWS(in.validate());
}
