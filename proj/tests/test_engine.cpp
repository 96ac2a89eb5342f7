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

#include "vqsim/engine.hpp"
#include "vqsim/oracles.hpp"

using namespace vqsim;

namespace {

std::vector<double> random_theta(std::size_t n, std::uint64_t seed,
                                 double span = 0.4) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-span, span);
    std::vector<double> theta(n);
    for (auto &t : theta)
        t = u(rng);
    return theta;
}

} // namespace

TEST_CASE("sign convention: single X rotation under H = X gives dtheta = 1") {
    Ansatz ansatz(StateVector(1), {{OperatorSum::parse("1.0*X0", 1), 0}});
    auto h = OperatorSum::parse("1.0*X0", 1);
    auto mv = real_time_coeffs(ansatz, {0.3}, h);
    CHECK(mv.m(0, 0) == doctest::Approx(1.0));
    CHECK(mv.v(0) == doctest::Approx(1.0));
    auto dtheta = solve_step(mv, Regularization::tikhonov());
    CHECK(dtheta(0) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("solve_step regularization") {
    StepMatrices mv{Eigen::MatrixXd::Zero(2, 2), Eigen::VectorXd::Ones(2)};
    mv.m(0, 0) = 1.0; // second row/column exactly singular
    auto trunc = solve_step(mv, Regularization::truncated());
    CHECK(trunc(0) == doctest::Approx(1.0));
    CHECK(trunc(1) == doctest::Approx(0.0));
    auto tik = solve_step(mv, Regularization::tikhonov());
    CHECK(tik(0) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(tik(1) == doctest::Approx(0.0));

    StepMatrices bad{Eigen::MatrixXd::Zero(2, 3), Eigen::VectorXd::Ones(2)};
    CHECK_THROWS(solve_step(bad, Regularization::tikhonov()));
}

TEST_CASE("problem validation") {
    auto h = OperatorSum::parse("1.0*Z0", 1);
    CHECK_THROWS(real_time_problem(OperatorSum::parse("1.0i*X0", 1), 1.0, 0.1));
    auto p = real_time_problem(h, 1.0, 0.1);
    CHECK_NOTHROW(p.validate());
    p.step = 0.0;
    CHECK_THROWS(p.validate());
    p.step = 2.0;
    CHECK_THROWS(p.validate()); // duration < step
}

TEST_CASE("real time evolution tracks the dense integrator") {
    auto h = OperatorSum::parse("0.5*X0 + 0.3*Z0 Z1 + 0.2*Y1", 2);
    auto ansatz = build_full_ansatz(2, 3, true);
    auto theta0 = random_theta(ansatz.param_count(), 17, 0.3);
    theta0[ansatz.scale_r_slot()] = 1.0;
    theta0[ansatz.scale_phi_slot()] = 0.0;

    const double duration = 0.4;
    auto problem = real_time_problem(h, duration, 0.002);
    std::vector<OperatorSum> obs{OperatorSum::parse("1.0*Z0", 2),
                                 OperatorSum::parse("1.0*X1", 2)};
    auto series = evolve(problem, ansatz, theta0, obs);

    Eigen::VectorXcd psi = to_dense(ansatz.prepare(theta0));
    psi = exact_schrodinger(to_dense(h), psi, duration, 4000);
    for (std::size_t o = 0; o < obs.size(); ++o) {
        Complex exact = (psi.adjoint() * to_dense(obs[o]) * psi)(0, 0);
        CHECK(series.observables.back()[o] ==
              doctest::Approx(exact.real()).epsilon(0.02));
    }
    CHECK(series.times.front() == 0.0);
    CHECK(series.times.back() == doctest::Approx(duration));
    CHECK(series.thetas.size() == series.times.size());
}

TEST_CASE("imaginary time evolution converges to the ground state") {
    auto h = OperatorSum::parse("1.0*Z0 + 0.3*X0", 1);
    auto ansatz = build_full_ansatz(1, 3);
    auto theta0 = random_theta(ansatz.param_count(), 23, 0.2);
    auto problem = imag_time_problem(h, 6.0, 0.01);
    auto series = evolve(problem, ansatz, theta0, {h});
    double ground = -std::sqrt(1.0 + 0.3 * 0.3);
    CHECK(series.observables.back()[0] ==
          doctest::Approx(ground).epsilon(1e-3));
}

TEST_CASE("shots-mode assembly is consistent with the exact matrices") {
    Ansatz ansatz(StateVector(1),
                  {{OperatorSum::parse("1.0*Y0", 1), 0},
                   {OperatorSum::parse("1.0*X0", 1), 1}});
    auto h = OperatorSum::parse("0.8*Z0 + 0.4*X0", 1);
    auto problem = real_time_problem(h, 1.0, 1.0);
    std::vector<double> theta{0.4, -0.7};

    auto exact = assemble(problem, ansatz, theta, 0.0, EstimatorMode::exact());
    auto shots = assemble(problem, ansatz, theta, 0.0,
                          EstimatorMode::with_shots(400000, 99));
    for (int k = 0; k < 2; ++k) {
        for (int j = 0; j < 2; ++j)
            CHECK(shots.m(k, j) ==
                  doctest::Approx(exact.m(k, j)).epsilon(0.05));
        CHECK(shots.v(k) == doctest::Approx(exact.v(k)).epsilon(0.05));
    }
    CHECK(shots.m(0, 1) == shots.m(1, 0)); // symmetry by construction
}

TEST_CASE("frozen-initial sources feed the prepared t=0 state") {
    Ansatz ansatz(StateVector(1), {{OperatorSum::parse("1.0*Y0", 1), 0}});
    auto h = OperatorSum::parse("1.0*X0", 1);
    GeneralizedEvolutionProblem problem;
    problem.qubit_count = 1;
    problem.duration = 1.0;
    problem.step = 1.0;
    problem.sources.push_back(constant_source(Complex(0.0, -1.0) * h,
                                              SourceKind::FrozenInitial));

    std::vector<double> theta{0.3};
    AssembleContext ctx;
    ctx.frozen_initial = ansatz.prepare({0.5});
    auto mv = assemble(problem, ansatz, theta, 0.0, EstimatorMode::exact(), ctx);
    // V_k = Re<d_k v| -iH |v_frozen>, computed directly as a cross-check.
    auto dk = ansatz.derivative_state(theta, 0);
    auto rhs = apply(Complex(0.0, -1.0) * h, *ctx.frozen_initial);
    CHECK(mv.v(0) == doctest::Approx(inner(dk, rhs).real()));

    AssembleContext empty;
    CHECK_THROWS(
        assemble(problem, ansatz, theta, 0.0, EstimatorMode::exact(), empty));
}

TEST_CASE("B operator enters as B^dag B and B^dag A") {
    Ansatz ansatz(StateVector(1), {{OperatorSum::parse("1.0*Y0", 1), 0}});
    auto b = OperatorSum::parse("1.0*I + 0.5*Z0", 1);
    auto a = OperatorSum::parse("1.0*X0", 1);
    GeneralizedEvolutionProblem problem;
    problem.qubit_count = 1;
    problem.duration = 1.0;
    problem.step = 1.0;
    problem.b_op = [b](double) { return b; };
    problem.sources.push_back(constant_source(a));

    std::vector<double> theta{0.7};
    auto mv = assemble(problem, ansatz, theta, 0.0, EstimatorMode::exact());
    auto dk = ansatz.derivative_state(theta, 0);
    auto bd = apply(b, dk);
    CHECK(mv.m(0, 0) == doctest::Approx(inner(bd, bd).real()));
    auto rhs = apply(a, ansatz.prepare(theta));
    CHECK(mv.v(0) == doctest::Approx(inner(bd, rhs).real()));

    // Shots mode must agree: the sandwich tasks then carry B^dag B terms.
    auto shots = assemble(problem, ansatz, theta, 0.0,
                          EstimatorMode::with_shots(400000, 5));
    CHECK(shots.m(0, 0) == doctest::Approx(mv.m(0, 0)).epsilon(0.05));
    CHECK(shots.v(0) == doctest::Approx(mv.v(0)).epsilon(0.05));
}

TEST_CASE("estimate_expectation in exact and shots mode") {
    auto ansatz = build_full_ansatz(1, 1);
    auto theta = random_theta(ansatz.param_count(), 3, 0.5);
    auto op = OperatorSum::parse("0.6*Z0 + 0.2*X0 + 0.1*I", 1);
    double exact =
        estimate_expectation(op, ansatz, theta, EstimatorMode::exact(), nullptr);
    CHECK(exact ==
          doctest::Approx(expectation(op, ansatz.prepare(theta)).real()));
    std::mt19937_64 rng(11);
    double sampled = estimate_expectation(
        op, ansatz, theta, EstimatorMode::with_shots(200000, 0), &rng);
    CHECK(sampled == doctest::Approx(exact).epsilon(0.05));
}

TEST_CASE("evolve with sampled estimates stays near the exact trajectory") {
    Ansatz ansatz(StateVector(1), {{OperatorSum::parse("1.0*X0", 1), 0}});
    auto h = OperatorSum::parse("1.0*X0", 1);
    auto problem = real_time_problem(h, 0.5, 0.05);
    EvolveOptions options;
    options.estimator = EstimatorMode::with_shots(20000, 7);
    auto series =
        evolve(problem, ansatz, {0.0}, {OperatorSum::parse("1.0*Z0", 1)},
               options);
    // theta(t) = t, <Z> = cos(2t).
    CHECK(series.thetas.back()[0] == doctest::Approx(0.5).epsilon(0.05));
    CHECK(series.observables.back()[0] ==
          doctest::Approx(std::cos(1.0)).epsilon(0.05));
}
