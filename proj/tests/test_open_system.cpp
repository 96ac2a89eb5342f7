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

#include "vqsim/open_system.hpp"
#include "vqsim/oracles.hpp"

using namespace vqsim;

namespace {

LindbladModel decay_model(double gamma) {
    return LindbladModel(OperatorSum(1),
                         {Complex(std::sqrt(gamma)) * raising_op(0, 1)});
}

TrajectoryOptions decay_options(double duration, double step) {
    TrajectoryOptions options;
    options.duration = duration;
    options.step = step;
    options.observables = {OperatorSum::parse("1.0*Z0", 1)};
    options.jump_routes = {sigma_plus_route(0, 1)};
    return options;
}

} // namespace

TEST_CASE("model construction and the damping operator") {
    auto model = decay_model(2.0);
    CHECK(model.channel_count() == 1);
    // L = 1/2 L^dag L = (gamma/2)|0><0| = |0><0| for gamma = 2.
    auto expect = Complex(1.0) * projector(0, 0, 1);
    CHECK((model.damping() - expect).is_zero());
    CHECK_THROWS(LindbladModel(OperatorSum::parse("1.0i*X0", 1), {}));
}

TEST_CASE("drift operator matches the damping counter-term algebra") {
    auto model = decay_model(1.0);

    // On |0>: A = -(1/2)(|0><0| - I).
    auto a0 = drift_operator(model, StateVector::basis_state(1, 0));
    auto expect =
        Complex(-0.5) * projector(0, 0, 1) +
        OperatorSum(PauliString::identity(1, 0.5));
    CHECK((a0 - expect).is_zero());

    // On |1>: <L^dag L> = 0 and A annihilates the state.
    auto one = StateVector::basis_state(1, 1);
    auto a1 = drift_operator(model, one);
    CHECK(apply(a1, one).norm() < 1e-14);

    // Without channels the drift is pure Schrodinger.
    LindbladModel closed(OperatorSum::parse("1.0*X0", 1), {});
    auto a = drift_operator(closed, StateVector(1));
    auto minus_ih = Complex(0.0, -1.0) * OperatorSum::parse("1.0*X0", 1);
    CHECK((a - minus_ih).is_zero());
}

TEST_CASE("cumulative channel ratios are monotone and end at one") {
    auto l1 = Complex(std::sqrt(0.3)) * raising_op(0, 2);
    auto l2 = Complex(std::sqrt(0.5)) * raising_op(1, 2);
    auto l3 = Complex(std::sqrt(0.2)) *
              OperatorSum(PauliString::single(Pauli::X, 0, 2));
    LindbladModel model(OperatorSum(2), {l1, l2, l3});
    auto state = StateVector(2); // |00>
    double gamma = 0.0;
    std::vector<double> rates;
    for (std::size_t k = 0; k < model.channel_count(); ++k) {
        rates.push_back(
            expectation(model.channel_rate_op(k), state).real());
        gamma += rates.back();
    }
    double cumulative = 0.0;
    for (double r : rates) {
        double next = cumulative + r / gamma;
        CHECK(next >= cumulative);
        cumulative = next;
    }
    CHECK(cumulative == doctest::Approx(1.0));
}

TEST_CASE("trajectory from |1> never jumps and stays put") {
    auto model = decay_model(1.0);
    auto ansatz = build_full_ansatz(1, 2);
    std::vector<double> theta0(ansatz.param_count(), 0.0);
    theta0[2] = M_PI / 2.0; // Y rotation to |1>
    auto options = decay_options(1.0, 0.02);
    auto rec = run_trajectory(model, ansatz, theta0, options, 5);
    CHECK(rec.jumps.empty());
    for (const auto &row : rec.observables)
        CHECK(row[0] == doctest::Approx(-1.0).epsilon(1e-6));
}

TEST_CASE("waiting time to the first jump is exponential") {
    auto model = decay_model(1.0);
    auto ansatz = build_full_ansatz(1, 2);
    std::vector<double> theta0(ansatz.param_count(), 0.0);
    auto options = decay_options(5.0, 0.02);
    double sum = 0.0;
    std::size_t jumped = 0;
    const std::size_t n_traj = 200;
    for (std::size_t i = 0; i < n_traj; ++i) {
        auto rec = run_trajectory(model, ansatz, theta0, options,
                                  trajectory_seed(11, i));
        CHECK(rec.jumps.size() <= 1); // |1> is dark for sigma+
        if (!rec.jumps.empty()) {
            sum += rec.jumps.front().time;
            ++jumped;
        }
    }
    // Truncated-exponential mean on [0, 5] with rate 1 is ~0.97.
    CHECK(jumped > n_traj * 0.9);
    CHECK(sum / static_cast<double>(jumped) ==
          doctest::Approx(0.97).epsilon(0.2));
}

TEST_CASE("two symmetric channels are selected evenly") {
    auto x_op = OperatorSum(PauliString::single(Pauli::X, 0, 1));
    LindbladModel model(OperatorSum(1), {Complex(std::sqrt(0.5)) * x_op,
                                         Complex(std::sqrt(0.5)) * x_op});
    std::size_t first = 0, total = 0;
    for (std::uint64_t s = 0; s < 25; ++s) {
        auto rec = exact_trajectory(model, StateVector(1), 50.0, 0.01,
                                    trajectory_seed(77, s), {});
        for (const auto &j : rec.jumps) {
            ++total;
            if (j.channel == 0)
                ++first;
        }
    }
    CHECK(total > 500);
    CHECK(static_cast<double>(first) / static_cast<double>(total) ==
          doctest::Approx(0.5).epsilon(0.12));
}

TEST_CASE("variational decay average matches the closed form") {
    auto model = decay_model(1.0);
    auto ansatz = build_full_ansatz(1, 2);
    std::vector<double> theta0(ansatz.param_count(), 0.0);
    auto options = decay_options(2.0, 0.02);
    auto records = run_trajectories(model, ansatz, theta0, options, 400, 200);
    auto avg = average_trajectories(records);
    for (std::size_t t = 0; t < avg.times.size(); t += 10) {
        double exact = 2.0 * std::exp(-avg.times[t]) - 1.0;
        CHECK(std::abs(avg.mean[t][0] - exact) <=
              4.0 * avg.std_error[t][0] + 0.03);
    }
}

TEST_CASE("jump count bound") {
    auto model = decay_model(1.0);
    // ||L^dag L||_inf = gamma = 1, T = 4 -> at most 4 mean jumps.
    double mean_jumps = 0.0;
    const std::size_t n_traj = 200;
    for (std::uint64_t s = 0; s < n_traj; ++s)
        mean_jumps += static_cast<double>(
            exact_trajectory(model, StateVector(1), 4.0, 0.01,
                             trajectory_seed(31, s), {})
                .jumps.size());
    mean_jumps /= static_cast<double>(n_traj);
    CHECK(mean_jumps <= 4.0);
}

TEST_CASE("averaging validation and conventions") {
    TrajectoryRecord a;
    a.times = {0.0, 0.1};
    a.observables = {{1.0}, {0.5}};
    auto avg = average_trajectories({a});
    CHECK(avg.mean[1][0] == doctest::Approx(0.5));
    CHECK(avg.std_error[1][0] == 0.0);

    TrajectoryRecord b = a;
    b.times = {0.0, 0.2};
    CHECK_THROWS(average_trajectories({a, b}));
    CHECK_THROWS(average_trajectories({}));
}

TEST_CASE("averaged single-qubit density matrix is physical") {
    auto model = decay_model(1.0);
    std::vector<OperatorSum> obs{OperatorSum::parse("1.0*X0", 1),
                                 OperatorSum::parse("1.0*Y0", 1),
                                 OperatorSum::parse("1.0*Z0", 1)};
    std::vector<TrajectoryRecord> records;
    for (std::uint64_t s = 0; s < 400; ++s) {
        StateVector plus = StateVector::from_amplitudes(
            1, {Complex(M_SQRT1_2), Complex(M_SQRT1_2)});
        records.push_back(exact_trajectory(model, plus, 1.0, 0.01,
                                           trajectory_seed(57, s), obs));
    }
    auto avg = average_trajectories(records);
    for (std::size_t t = 0; t < avg.times.size(); t += 25) {
        Eigen::MatrixXcd rho = Eigen::MatrixXcd::Identity(2, 2) * 0.5;
        rho += 0.5 * avg.mean[t][0] *
               to_dense(OperatorSum::parse("1.0*X0", 1));
        rho += 0.5 * avg.mean[t][1] *
               to_dense(OperatorSum::parse("1.0*Y0", 1));
        rho += 0.5 * avg.mean[t][2] *
               to_dense(OperatorSum::parse("1.0*Z0", 1));
        CHECK(rho.trace().real() == doctest::Approx(1.0));
        CHECK((rho - rho.adjoint()).norm() < 1e-12);
        double max_se = std::max(
            {avg.std_error[t][0], avg.std_error[t][1], avg.std_error[t][2]});
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
        CHECK(es.eigenvalues().minCoeff() >= -3.0 * max_se - 1e-9);
    }
}

TEST_CASE("worker count does not change the results") {
    auto model = decay_model(1.0);
    auto ansatz = build_full_ansatz(1, 2);
    std::vector<double> theta0(ansatz.param_count(), 0.0);
    auto options = decay_options(1.0, 0.05);
    auto serial = run_trajectories(model, ansatz, theta0, options, 5, 8, 1);
    auto parallel = run_trajectories(model, ansatz, theta0, options, 5, 8, 3);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].seed == parallel[i].seed);
        CHECK(serial[i].observables == parallel[i].observables);
        CHECK(serial[i].jumps.size() == parallel[i].jumps.size());
    }
}

TEST_CASE("variational and oracle trajectories replay the same decisions") {
    auto model = decay_model(1.0);
    auto ansatz = build_full_ansatz(1, 3);
    std::vector<double> theta0(ansatz.param_count(), 0.0);
    auto options = decay_options(3.0, 0.02);
    for (std::uint64_t seed : {2ull, 9ull, 15ull}) {
        auto variational =
            run_trajectory(model, ansatz, theta0, options, seed);
        auto oracle = exact_trajectory(model, StateVector(1), 3.0, 0.02, seed,
                                       options.observables);
        REQUIRE(variational.jumps.size() == oracle.jumps.size());
        for (std::size_t j = 0; j < oracle.jumps.size(); ++j) {
            CHECK(variational.jumps[j].time ==
                  doctest::Approx(oracle.jumps[j].time));
            CHECK(variational.jumps[j].channel == oracle.jumps[j].channel);
        }
    }
}

TEST_CASE("ising benchmark construction") {
    auto bench = build_ising_benchmark();
    CHECK(bench.model.qubit_count() == 6);
    CHECK(bench.model.channel_count() == 6);
    CHECK(bench.jump_routes.size() == 6);
    CHECK(bench.observable.term_count() == 7); // 7 bonds, weight 1/7
    CHECK(bench.model.hamiltonian().term_count() == 13);
    CHECK(bench.ansatz.param_count() == 54);
    // All bonds satisfied on |0...0>: C(0) = 1.
    CHECK(expectation(bench.observable, StateVector(6)).real() ==
          doctest::Approx(1.0));
}

TEST_CASE("short benchmark trajectory smoke run") {
    auto bench = build_ising_benchmark();
    TrajectoryOptions options;
    options.duration = 0.1;
    options.step = 0.005;
    options.observables = {bench.observable};
    options.jump_routes = bench.jump_routes;
    std::vector<double> theta0(54, 0.0);
    auto rec = run_trajectory(bench.model, bench.ansatz, theta0, options, 1);
    CHECK(rec.times.size() == 21);
    // The circuit ansatz is unitary: the trajectory state stays normalized.
    CHECK(bench.ansatz.prepare(rec.thetas.empty()
                                   ? theta0
                                   : rec.thetas.back())
              .norm() == doctest::Approx(1.0));
    CHECK(rec.observables.front()[0] == doctest::Approx(1.0));
}
