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

#include "vqsim/open_system.hpp"

#include <cmath>
#include <iostream>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace vqsim {

namespace {

const Complex kImag(0.0, 1.0);

std::vector<double> record_row(const std::vector<OperatorSum> &observables,
                               const StateVector &state) {
    std::vector<double> row;
    row.reserve(observables.size());
    for (const auto &obs : observables)
        row.push_back(expectation(obs, state).real());
    return row;
}

} // namespace

LindbladModel::LindbladModel(OperatorSum hamiltonian,
                             std::vector<OperatorSum> lindblad_ops)
    : hamiltonian_(std::move(hamiltonian)),
      lindblad_ops_(std::move(lindblad_ops)),
      damping_(hamiltonian_.qubit_count()) {
    if (!hamiltonian_.is_hermitian())
        throw std::invalid_argument("LindbladModel: H must be Hermitian");
    for (const auto &l : lindblad_ops_) {
        if (l.qubit_count() != qubit_count())
            throw std::invalid_argument(
                "LindbladModel: jump operator qubit count mismatch");
        rate_ops_.push_back(l.adjoint() * l);
        damping_ = damping_ + Complex(0.5) * rate_ops_.back();
    }
}

OperatorSum drift_operator(const LindbladModel &model,
                           const StateVector &state) {
    auto a = -kImag * model.hamiltonian() - model.damping();
    double mean = expectation(model.damping(), state).real() /
                  state.norm_squared();
    return a + OperatorSum(
                   PauliString::identity(model.qubit_count(), mean));
}

SourceTerm drift_source(const LindbladModel &model) {
    SourceTerm source;
    source.op = [model](double, const StateVector &state) {
        return drift_operator(model, state);
    };
    source.kind = SourceKind::Self;
    return source;
}

TrajectoryRecord run_trajectory(const LindbladModel &model,
                                const Ansatz &ansatz,
                                const std::vector<double> &theta0,
                                const TrajectoryOptions &options,
                                std::uint64_t seed) {
    if (options.jump_routes.size() != model.channel_count())
        throw std::invalid_argument(
            "run_trajectory: one jump route per channel required");
    const auto steps = static_cast<std::size_t>(
        std::llround(options.duration / options.step));
    if (steps == 0)
        throw std::invalid_argument("run_trajectory: zero steps");

    GeneralizedEvolutionProblem drift;
    drift.qubit_count = model.qubit_count();
    drift.duration = options.duration;
    drift.step = options.step;
    drift.sources.push_back(drift_source(model));

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::mt19937_64 engine_rng(seed ^ 0x5851f42d4c957f2dULL);
    AssembleContext ctx;
    ctx.rng = &engine_rng;

    TrajectoryRecord record;
    record.seed = seed;
    std::vector<double> theta = theta0;
    bool warned = false;

    auto record_point = [&](double t) {
        record.times.push_back(t);
        if (options.record_theta)
            record.thetas.push_back(theta);
        record.observables.push_back(
            record_row(options.observables, ansatz.prepare(theta)));
    };
    record_point(0.0);

    double gamma_acc = 0.0; // Gamma
    double q = uniform(rng);
    for (std::size_t i = 0; i < steps; ++i) {
        const double t = static_cast<double>(i) * options.step;
        StateVector state = ansatz.prepare(theta);
        const double norm_sq = state.norm_squared();
        std::vector<double> rates(model.channel_count());
        double gamma = 0.0;
        for (std::size_t k = 0; k < model.channel_count(); ++k) {
            rates[k] = std::max(
                0.0, expectation(model.channel_rate_op(k), state).real() /
                         norm_sq);
            gamma += rates[k];
        }
        if (!warned && gamma * options.step > 0.1) {
            std::cerr << "run_trajectory: gamma*dt = " << gamma * options.step
                      << " > 0.1, first-order jump probabilities are "
                         "inaccurate\n";
            warned = true;
        }
        gamma_acc += gamma * options.step;

        if (std::exp(-gamma_acc) >= q) {
            // No jump: advance the drift one Euler step.
            auto mv = assemble(drift, ansatz, theta, t, options.estimator, ctx);
            Eigen::VectorXd dtheta = solve_step(mv, options.regularization);
            if (!dtheta.allFinite())
                throw std::runtime_error(
                    "run_trajectory: non-finite drift derivative at step " +
                    std::to_string(i));
            for (std::size_t p = 0; p < theta.size(); ++p)
                theta[p] += dtheta(static_cast<Eigen::Index>(p)) * options.step;
        } else {
            // Jump: pick the channel from the cumulative rate ratios.
            if (gamma <= 0.0)
                throw std::runtime_error(
                    "run_trajectory: jump triggered with zero total rate "
                    "(internal inconsistency)");
            const double qp = uniform(rng);
            std::size_t channel = model.channel_count() - 1;
            double cumulative = 0.0;
            for (std::size_t k = 0; k < model.channel_count(); ++k) {
                cumulative += rates[k] / gamma;
                if (qp < cumulative) {
                    channel = k;
                    break;
                }
            }
            if (rates[channel] <= 0.0)
                throw std::runtime_error(
                    "run_trajectory: selected channel annihilates the state "
                    "(internal inconsistency)");
            theta = apply_svd_route(options.jump_routes[channel], ansatz,
                                    theta, options.route_options);
            record.jumps.push_back({t, channel});
            gamma_acc = 0.0;
            q = uniform(rng);
        }
        record_point(static_cast<double>(i + 1) * options.step);
    }
    return record;
}

std::uint64_t trajectory_seed(std::uint64_t master_seed, std::uint64_t index) {
    // splitmix64 finalizer over the combined key.
    std::uint64_t z = master_seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::vector<TrajectoryRecord>
run_trajectories(const LindbladModel &model, const Ansatz &ansatz,
                 const std::vector<double> &theta0,
                 const TrajectoryOptions &options, std::uint64_t master_seed,
                 std::size_t count, std::size_t workers) {
    std::vector<TrajectoryRecord> records(count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            records[i] = run_trajectory(model, ansatz, theta0, options,
                                        trajectory_seed(master_seed, i));
        return records;
    }
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += workers)
                    records[i] =
                        run_trajectory(model, ansatz, theta0, options,
                                       trajectory_seed(master_seed, i));
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        });
    for (auto &t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
    return records;
}

AveragedSeries
average_trajectories(const std::vector<TrajectoryRecord> &records) {
    if (records.empty())
        throw std::invalid_argument("average_trajectories: no records");
    const auto &grid = records.front().times;
    const std::size_t n_obs = records.front().observables.front().size();
    for (const auto &r : records) {
        if (r.times != grid)
            throw std::invalid_argument(
                "average_trajectories: misaligned time grids");
        if (r.observables.front().size() != n_obs)
            throw std::invalid_argument(
                "average_trajectories: observable count mismatch");
    }
    const double n = static_cast<double>(records.size());
    AveragedSeries out;
    out.times = grid;
    out.mean.assign(grid.size(), std::vector<double>(n_obs, 0.0));
    out.std_error.assign(grid.size(), std::vector<double>(n_obs, 0.0));
    for (std::size_t t = 0; t < grid.size(); ++t)
        for (std::size_t o = 0; o < n_obs; ++o) {
            double sum = 0.0, sum_sq = 0.0;
            for (const auto &r : records) {
                double v = r.observables[t][o];
                sum += v;
                sum_sq += v * v;
            }
            double mean = sum / n;
            out.mean[t][o] = mean;
            if (records.size() > 1) {
                double var = (sum_sq - n * mean * mean) / (n - 1.0);
                out.std_error[t][o] = std::sqrt(std::max(0.0, var) / n);
            }
        }
    return out;
}

IsingBenchmark build_ising_benchmark() {
    const std::size_t n = 6;
    const double j_coupling = 1.0, h_x = 1.0, gamma = 1.0;
    const std::vector<std::pair<std::size_t, std::size_t>> bonds{
        {4, 5}, {2, 4}, {3, 5}, {2, 3}, {0, 2}, {1, 3}, {0, 1}};

    std::vector<PauliString> h_terms;
    std::vector<PauliString> c_terms;
    for (const auto &[a, b] : bonds) {
        std::vector<Pauli> f(n, Pauli::I);
        f[a] = Pauli::Z;
        f[b] = Pauli::Z;
        h_terms.emplace_back(j_coupling / 4.0, f);
        c_terms.emplace_back(1.0 / 7.0, f);
    }
    for (std::size_t q = 0; q < n; ++q)
        h_terms.push_back(PauliString::single(Pauli::X, q, n, h_x));

    std::vector<OperatorSum> jumps;
    std::vector<SvdRoute> routes;
    for (std::size_t q = 0; q < n; ++q) {
        jumps.push_back(Complex(std::sqrt(gamma)) * raising_op(q, n));
        routes.push_back(sigma_plus_route(q, n));
    }

    return {LindbladModel(OperatorSum(n, std::move(h_terms)),
                          std::move(jumps)),
            build_hamiltonian_ansatz(), OperatorSum(n, std::move(c_terms)),
            std::move(routes)};
}

} // namespace vqsim
