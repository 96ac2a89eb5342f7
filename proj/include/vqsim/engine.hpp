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
 * Per-step assembly and solution of the McLachlan linear system
 * M_tilde * dtheta = V_tilde for generalised evolution
 * B(t) d|v>/dt = sum_j A_j(t) |v'_j(t)>, and the Euler time stepper
 * built on it.
 *
 * Sign convention: the drive is V_k = Re<d_k v| B^dag A_j |v'_j>, the form
 * obtained from minimising ||B d|v>/dt - sum_j A_j |v'_j>|| directly. For
 * real time (A = -iH, B = I) this gives V_k = Im<d_k phi|H|phi> and
 * reproduces exact dynamics on an exactly expressive ansatz.
 */

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "vqsim/ansatz.hpp"
#include "vqsim/overlap.hpp"

namespace vqsim {

enum class SourceKind {
    Self,          ///< |v'_j> is the current variational state
    FixedState,    ///< |v'_j> is a constant externally supplied state
    FrozenInitial, ///< |v'_j> is the prepared state at t = 0
};

struct SourceTerm {
    /// A_j(t, current prepared state). The state argument lets drives carry
    /// measured expectation values (imaginary time, trajectory damping).
    std::function<OperatorSum(double, const StateVector &)> op;
    SourceKind kind = SourceKind::Self;
    std::optional<StateVector> fixed; ///< required for FixedState
};

/// Source operator that ignores time and state.
SourceTerm constant_source(OperatorSum op,
                           SourceKind kind = SourceKind::Self,
                           std::optional<StateVector> fixed = std::nullopt);

struct GeneralizedEvolutionProblem {
    std::size_t qubit_count;
    /// B(t); empty function means B = I.
    std::function<OperatorSum(double)> b_op;
    std::vector<SourceTerm> sources;
    double duration;
    double step;

    void validate() const;
    bool b_is_identity() const { return !b_op; }
};

struct StepMatrices {
    Eigen::MatrixXd m; ///< symmetric params x params
    Eigen::VectorXd v;
};

struct EstimatorMode {
    enum class Kind { Exact, Shots } kind = Kind::Exact;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;

    static EstimatorMode exact() { return {}; }
    static EstimatorMode with_shots(std::uint64_t n, std::uint64_t seed) {
        return {Kind::Shots, n, seed};
    }
    bool is_exact() const { return kind == Kind::Exact; }
};

struct Regularization {
    enum class Kind { Tikhonov, TruncatedSpectrum } kind = Kind::Tikhonov;
    /// Tikhonov: lambda = value * trace(M)/dim; TruncatedSpectrum: absolute
    /// eigenvalue cutoff.
    double value = 1e-6;

    static Regularization tikhonov(double factor = 1e-6) {
        return {Kind::Tikhonov, factor};
    }
    static Regularization truncated(double cutoff = 1e-8) {
        return {Kind::TruncatedSpectrum, cutoff};
    }
};

/// Context threaded through a time evolution: the frozen initial state and
/// the RNG stream backing Shots-mode estimates.
struct AssembleContext {
    std::optional<StateVector> frozen_initial;
    std::mt19937_64 *rng = nullptr;
};

StepMatrices assemble(const GeneralizedEvolutionProblem &problem,
                      const Ansatz &ansatz, const std::vector<double> &theta,
                      double t, const EstimatorMode &mode,
                      const AssembleContext &ctx = {});

Eigen::VectorXd solve_step(const StepMatrices &m, const Regularization &reg);

/// Scalar expectation <phi|op|phi> through the estimator: exact, or one
/// sampled Hadamard-test task per Pauli term in Shots mode.
double estimate_expectation(const OperatorSum &op, const Ansatz &ansatz,
                            const std::vector<double> &theta,
                            const EstimatorMode &mode, std::mt19937_64 *rng);

struct TimeSeries {
    std::vector<double> times;
    std::vector<std::vector<double>> thetas;      ///< per grid point
    std::vector<std::vector<double>> observables; ///< [time][observable]
};

struct EvolveOptions {
    Regularization regularization;
    EstimatorMode estimator;
    bool record_theta = true;
};

TimeSeries evolve(const GeneralizedEvolutionProblem &problem,
                  const Ansatz &ansatz, const std::vector<double> &theta0,
                  const std::vector<OperatorSum> &observables,
                  const EvolveOptions &options = {});

/// M, V for real time evolution under Hermitian H (B = I, A = -iH).
StepMatrices real_time_coeffs(const Ansatz &ansatz,
                              const std::vector<double> &theta,
                              const OperatorSum &hamiltonian);
/// M, C for normalized imaginary time (A = -(H - <H>)).
StepMatrices imag_time_coeffs(const Ansatz &ansatz,
                              const std::vector<double> &theta,
                              const OperatorSum &hamiltonian);

GeneralizedEvolutionProblem
real_time_problem(const OperatorSum &hamiltonian, double duration,
                  double step);
GeneralizedEvolutionProblem
imag_time_problem(const OperatorSum &hamiltonian, double duration,
                  double step);

} // namespace vqsim
