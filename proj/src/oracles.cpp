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

#include "vqsim/oracles.hpp"

#include <stdexcept>

namespace vqsim {

namespace {

Eigen::Matrix2cd single_pauli(Pauli p) {
    const Complex i(0.0, 1.0);
    Eigen::Matrix2cd m;
    switch (p) {
    case Pauli::I:
        m << 1, 0, 0, 1;
        break;
    case Pauli::X:
        m << 0, 1, 1, 0;
        break;
    case Pauli::Y:
        m << 0, -i, i, 0;
        break;
    case Pauli::Z:
        m << 1, 0, 0, -1;
        break;
    }
    return m;
}

template <typename State, typename Rhs>
State rk4(const State &y0, double duration, std::size_t steps, Rhs rhs) {
    if (steps == 0)
        throw std::invalid_argument("rk4: zero steps");
    State y = y0;
    const double h = duration / static_cast<double>(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        State k1 = rhs(y);
        State k2 = rhs(y + (h / 2.0) * k1);
        State k3 = rhs(y + (h / 2.0) * k2);
        State k4 = rhs(y + h * k3);
        y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return y;
}

} // namespace

Eigen::MatrixXcd to_dense(const PauliString &term) {
    // Qubit 0 is the LSB, so it sits innermost in the Kronecker product:
    // each later qubit wraps the accumulated block as the outer factor.
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
    for (std::size_t q = 0; q < term.qubit_count(); ++q) {
        Eigen::Matrix2cd f = single_pauli(term.factors()[q]);
        Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
        next.block(0, 0, m.rows(), m.cols()) = f(0, 0) * m;
        next.block(0, m.cols(), m.rows(), m.cols()) = f(0, 1) * m;
        next.block(m.rows(), 0, m.rows(), m.cols()) = f(1, 0) * m;
        next.block(m.rows(), m.cols(), m.rows(), m.cols()) = f(1, 1) * m;
        m = std::move(next);
    }
    return term.coefficient() * m;
}

Eigen::MatrixXcd to_dense(const OperatorSum &op) {
    const auto dim = static_cast<Eigen::Index>(1) << op.qubit_count();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &term : op.terms())
        m += to_dense(term);
    return m;
}

Eigen::VectorXcd to_dense(const StateVector &state) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(state.dimension()));
    for (std::size_t i = 0; i < state.dimension(); ++i)
        v(static_cast<Eigen::Index>(i)) = state.amplitude(i);
    return v;
}

StateVector from_dense(std::size_t qubit_count, const Eigen::VectorXcd &v) {
    std::vector<Complex> amps(static_cast<std::size_t>(v.size()));
    for (std::size_t i = 0; i < amps.size(); ++i)
        amps[i] = v(static_cast<Eigen::Index>(i));
    return StateVector::from_amplitudes(qubit_count, std::move(amps));
}

Eigen::VectorXcd exact_schrodinger(const Eigen::MatrixXcd &hamiltonian,
                                   const Eigen::VectorXcd &psi0,
                                   double duration, std::size_t steps) {
    const Complex i(0.0, 1.0);
    return rk4(psi0, duration, steps, [&](const Eigen::VectorXcd &psi) {
        return Eigen::VectorXcd(-i * (hamiltonian * psi));
    });
}

Eigen::MatrixXcd exact_lindblad(const Eigen::MatrixXcd &hamiltonian,
                                const std::vector<Eigen::MatrixXcd> &lindblad,
                                const Eigen::MatrixXcd &rho0, double duration,
                                std::size_t steps) {
    const Complex i(0.0, 1.0);
    return rk4(rho0, duration, steps, [&](const Eigen::MatrixXcd &rho) {
        Eigen::MatrixXcd d = -i * (hamiltonian * rho - rho * hamiltonian);
        for (const auto &l : lindblad) {
            Eigen::MatrixXcd ldl = l.adjoint() * l;
            d += l * rho * l.adjoint() - 0.5 * (ldl * rho + rho * ldl);
        }
        return d;
    });
}

Eigen::VectorXcd exact_imag_time(const Eigen::MatrixXcd &hamiltonian,
                                 const Eigen::VectorXcd &psi0,
                                 double duration, std::size_t steps) {
    return rk4(psi0, duration, steps, [&](const Eigen::VectorXcd &psi) {
        double n2 = psi.squaredNorm();
        Complex energy = (psi.adjoint() * hamiltonian * psi)(0, 0) / n2;
        return Eigen::VectorXcd(-(hamiltonian * psi - energy * psi));
    });
}

Eigen::VectorXcd exact_linear_flow(const Eigen::MatrixXcd &generator,
                                   const Eigen::VectorXcd &psi0,
                                   double duration, std::size_t steps) {
    return rk4(psi0, duration, steps, [&](const Eigen::VectorXcd &psi) {
        return Eigen::VectorXcd(generator * psi);
    });
}

TrajectoryRecord exact_trajectory(const LindbladModel &model,
                                  const StateVector &psi0, double duration,
                                  double step, std::uint64_t seed,
                                  const std::vector<OperatorSum> &observables) {
    const auto steps =
        static_cast<std::size_t>(std::llround(duration / step));
    if (steps == 0)
        throw std::invalid_argument("exact_trajectory: zero steps");

    Eigen::MatrixXcd h = to_dense(model.hamiltonian());
    Eigen::MatrixXcd damping = to_dense(model.damping());
    std::vector<Eigen::MatrixXcd> jumps, rate_ops;
    std::vector<Eigen::MatrixXcd> obs_dense;
    for (std::size_t k = 0; k < model.channel_count(); ++k) {
        jumps.push_back(to_dense(model.lindblad_ops()[k]));
        rate_ops.push_back(to_dense(model.channel_rate_op(k)));
    }
    for (const auto &o : observables)
        obs_dense.push_back(to_dense(o));

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);

    TrajectoryRecord record;
    record.seed = seed;
    Eigen::VectorXcd psi = to_dense(psi0).normalized();
    auto record_point = [&](double t) {
        record.times.push_back(t);
        std::vector<double> row;
        row.reserve(obs_dense.size());
        for (const auto &o : obs_dense)
            row.push_back((psi.adjoint() * o * psi)(0, 0).real());
        record.observables.push_back(std::move(row));
    };
    record_point(0.0);

    const Complex i(0.0, 1.0);
    double gamma_acc = 0.0;
    double q = uniform(rng);
    for (std::size_t s = 0; s < steps; ++s) {
        const double t = static_cast<double>(s) * step;
        std::vector<double> rates(jumps.size());
        double gamma = 0.0;
        for (std::size_t k = 0; k < jumps.size(); ++k) {
            rates[k] = std::max(
                0.0, (psi.adjoint() * rate_ops[k] * psi)(0, 0).real());
            gamma += rates[k];
        }
        gamma_acc += gamma * step;
        if (std::exp(-gamma_acc) >= q) {
            double mean = (psi.adjoint() * damping * psi)(0, 0).real();
            Eigen::VectorXcd next =
                psi - step * (i * (h * psi) + damping * psi - mean * psi);
            psi = next.normalized();
        } else {
            if (gamma <= 0.0)
                throw std::runtime_error(
                    "exact_trajectory: jump with zero total rate");
            const double qp = uniform(rng);
            std::size_t channel = jumps.size() - 1;
            double cumulative = 0.0;
            for (std::size_t k = 0; k < jumps.size(); ++k) {
                cumulative += rates[k] / gamma;
                if (qp < cumulative) {
                    channel = k;
                    break;
                }
            }
            Eigen::VectorXcd jumped = jumps[channel] * psi;
            if (jumped.norm() < 1e-12)
                throw std::runtime_error(
                    "exact_trajectory: selected channel annihilates the "
                    "state");
            psi = jumped.normalized();
            record.jumps.push_back({t, channel});
            gamma_acc = 0.0;
            q = uniform(rng);
        }
        record_point(static_cast<double>(s + 1) * step);
    }
    return record;
}

double trace_distance(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd d = a - b;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(d);
    return 0.5 * svd.singularValues().sum();
}

namespace {

// Hermitian PSD square root with negative-eigenvalue clamping, stable for
// rank-deficient inputs such as pure-state density matrices.
Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd &m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
    Eigen::VectorXd vals = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return es.eigenvectors() * vals.asDiagonal() *
           es.eigenvectors().adjoint();
}

} // namespace

double fidelity(const Eigen::MatrixXcd &rho, const Eigen::MatrixXcd &sigma) {
    Eigen::MatrixXcd sqrt_rho = psd_sqrt(rho);
    double tr = psd_sqrt(sqrt_rho * sigma * sqrt_rho).trace().real();
    return tr * tr;
}

Eigen::MatrixXcd density_matrix(const Eigen::VectorXcd &psi) {
    return psi * psi.adjoint();
}

} // namespace vqsim
