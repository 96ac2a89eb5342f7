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

#include "vqsim/linalg.hpp"

#include <cmath>
#include <stdexcept>

#include "vqsim/oracles.hpp"

namespace vqsim {

namespace {

const Complex kImag(0.0, 1.0);
constexpr double kNormFloor = 1e-12;

OperatorSum path_generator(const OperatorSum &m, double path_length) {
    auto ident = OperatorSum(PauliString::identity(m.qubit_count()));
    return Complex(1.0 / path_length) * (m - ident);
}

void require_scale(const Ansatz &ansatz, const char *who) {
    if (!ansatz.scale_enabled())
        throw std::invalid_argument(std::string(who) +
                                    ": ansatz needs the scale parameters to "
                                    "carry a non-unit norm");
}

LinalgResult run_problem(const GeneralizedEvolutionProblem &problem,
                         const Ansatz &ansatz,
                         const std::vector<double> &theta0,
                         const LinalgOptions &options) {
    EvolveOptions evolve_options;
    evolve_options.regularization = options.regularization;
    evolve_options.estimator = options.estimator;
    auto series = evolve(problem, ansatz, theta0, {}, evolve_options);
    LinalgResult result{series.thetas.back(),
                        ansatz.scale_factor(series.thetas.back()),
                        std::move(series)};
    return result;
}

// Run one route stage, clamping the step to the stage duration and
// skipping stages that are trivially the identity.
std::vector<double> run_stage(const OperatorSum &hamiltonian, double duration,
                              double step, bool imaginary,
                              const Ansatz &ansatz, std::vector<double> theta,
                              const SvdRouteOptions &options) {
    if (duration <= 0.0 || hamiltonian.is_zero())
        return theta;
    double dt = std::min(step, duration);
    auto problem = imaginary ? imag_time_problem(hamiltonian, duration, dt)
                             : real_time_problem(hamiltonian, duration, dt);
    EvolveOptions evolve_options;
    evolve_options.regularization = options.regularization;
    evolve_options.estimator = options.estimator;
    auto series = evolve(problem, ansatz, theta, {}, evolve_options);
    return series.thetas.back();
}

// Drop the identity component: for unitary factors it is a global phase.
OperatorSum strip_identity(const OperatorSum &op) {
    std::vector<PauliString> kept;
    for (const auto &term : op.terms())
        if (!term.is_identity())
            kept.push_back(term);
    return {op.qubit_count(), std::move(kept)};
}

// Hermitian generator of a unitary through the principal logarithm:
// W = exp(-iH) with eigenphases in (-pi, pi].
Eigen::MatrixXcd principal_generator(const Eigen::MatrixXcd &w) {
    Eigen::ComplexSchur<Eigen::MatrixXcd> schur(w);
    const auto &t = schur.matrixT();
    for (Eigen::Index i = 0; i < t.rows(); ++i)
        for (Eigen::Index j = i + 1; j < t.cols(); ++j)
            if (std::abs(t(i, j)) > 1e-10)
                throw std::invalid_argument(
                    "principal_generator: matrix is not unitary");
    Eigen::VectorXcd phases(t.rows());
    for (Eigen::Index i = 0; i < t.rows(); ++i)
        phases(i) = -std::arg(t(i, i));
    return schur.matrixU() * phases.asDiagonal() *
           schur.matrixU().adjoint();
}

std::size_t qubits_of_dim(Eigen::Index dim, const char *who) {
    std::size_t n = 0;
    while ((Eigen::Index(1) << n) < dim)
        ++n;
    if ((Eigen::Index(1) << n) != dim)
        throw std::invalid_argument(std::string(who) +
                                    ": dimension is not a power of two");
    return n;
}

} // namespace

LinalgResult multiply_via_path(const OperatorSum &m, const Ansatz &ansatz,
                               const std::vector<double> &theta0,
                               const LinalgOptions &options,
                               double path_length) {
    require_scale(ansatz, "multiply_via_path");
    GeneralizedEvolutionProblem problem;
    problem.qubit_count = m.qubit_count();
    problem.duration = path_length;
    problem.step = options.step;
    problem.sources.push_back(constant_source(path_generator(m, path_length),
                                              SourceKind::FrozenInitial));
    return run_problem(problem, ansatz, theta0, options);
}

LinalgResult multiply_via_normalized_path(const OperatorSum &m,
                                          const Ansatz &ansatz,
                                          const std::vector<double> &theta0,
                                          const LinalgOptions &options,
                                          double path_length) {
    auto psi0 = ansatz.prepare(theta0);
    if (std::abs(psi0.norm() - 1.0) > 1e-8)
        throw std::invalid_argument(
            "multiply_via_normalized_path: initial state must be normalized");

    // n^2(s) = (1-s)^2 + s(1-s)<M^dag + M> + s^2 <M^dag M> on |v0>.
    const double a = expectation(m.adjoint() + m, psi0).real();
    const double b = expectation(m.adjoint() * m, psi0).real();
    const double t_len = path_length;
    auto norm_sq = [a, b, t_len](double t) {
        double s = t / t_len;
        return (1.0 - s) * (1.0 - s) + s * (1.0 - s) * a + s * s * b;
    };
    auto norm_sq_dot = [a, b, t_len](double t) {
        double s = t / t_len;
        return (-2.0 * (1.0 - s) + (1.0 - 2.0 * s) * a + 2.0 * s * b) / t_len;
    };
    for (double t = 0.0; t <= path_length + options.step / 2;
         t += options.step)
        if (norm_sq(t) < kNormFloor)
            throw std::runtime_error(
                "multiply_via_normalized_path: interpolant norm vanished at "
                "t = " + std::to_string(t));

    auto g = path_generator(m, path_length);
    auto ident = OperatorSum(PauliString::identity(m.qubit_count()));

    GeneralizedEvolutionProblem problem;
    problem.qubit_count = m.qubit_count();
    problem.duration = path_length;
    problem.step = options.step;
    SourceTerm drift;
    drift.op = [norm_sq, norm_sq_dot, ident](double t, const StateVector &) {
        // Ndot/N = -(n^2)'/(2 n^2) for N = 1/n.
        double c1 = -norm_sq_dot(t) / (2.0 * norm_sq(t));
        return Complex(c1) * ident;
    };
    drift.kind = SourceKind::Self;
    problem.sources.push_back(std::move(drift));
    SourceTerm pull;
    pull.op = [norm_sq, g](double t, const StateVector &) {
        return Complex(1.0 / std::sqrt(norm_sq(t))) * g;
    };
    pull.kind = SourceKind::FrozenInitial;
    problem.sources.push_back(std::move(pull));
    return run_problem(problem, ansatz, theta0, options);
}

LinalgResult solve_linear_system(const OperatorSum &m, const Ansatz &ansatz,
                                 const std::vector<double> &theta0,
                                 const LinalgOptions &options,
                                 double path_length) {
    require_scale(ansatz, "solve_linear_system");
    const std::size_t n = m.qubit_count();
    auto ident = OperatorSum(PauliString::identity(n));
    auto path_op = [&](double t) {
        double s = t / path_length;
        return Complex(s) * m + Complex(1.0 - s) * ident;
    };

    if (n <= 6) {
        // Desk-scale singularity guard along the time grid.
        Eigen::MatrixXcd dense_m = to_dense(m);
        Eigen::MatrixXcd dense_i =
            Eigen::MatrixXcd::Identity(dense_m.rows(), dense_m.cols());
        for (double t = 0.0; t <= path_length + options.step / 2;
             t += options.step) {
            double s = t / path_length;
            Eigen::JacobiSVD<Eigen::MatrixXcd> svd(s * dense_m +
                                                   (1.0 - s) * dense_i);
            const auto &sv = svd.singularValues();
            if (sv(sv.size() - 1) <= kNormFloor ||
                sv(0) / sv(sv.size() - 1) > 1e12)
                throw std::runtime_error(
                    "solve_linear_system: path matrix numerically singular "
                    "at t = " + std::to_string(t));
        }
    }

    GeneralizedEvolutionProblem problem;
    problem.qubit_count = n;
    problem.duration = path_length;
    problem.step = options.step;
    problem.b_op = path_op;
    problem.sources.push_back(constant_source(
        Complex(-1.0) * path_generator(m, path_length), SourceKind::Self));
    return run_problem(problem, ansatz, theta0, options);
}

OperatorSum decompose_dense(const Eigen::MatrixXcd &m, std::size_t qubit_count,
                            double tol) {
    if (qubit_count > 4)
        throw std::invalid_argument(
            "decompose_dense: supported up to 4 qubits");
    const auto dim = Eigen::Index(1) << qubit_count;
    if (m.rows() != dim || m.cols() != dim)
        throw std::invalid_argument("decompose_dense: dimension mismatch");
    std::vector<PauliString> terms;
    const std::size_t strings = std::size_t(1) << (2 * qubit_count);
    for (std::size_t code = 0; code < strings; ++code) {
        std::vector<Pauli> factors(qubit_count);
        for (std::size_t q = 0; q < qubit_count; ++q)
            factors[q] = static_cast<Pauli>((code >> (2 * q)) & 3);
        PauliString sigma(1.0, factors);
        Complex coeff =
            (to_dense(sigma).adjoint() * m).trace() / static_cast<double>(dim);
        if (std::abs(coeff) > tol)
            terms.emplace_back(coeff, std::move(factors));
    }
    return {qubit_count, std::move(terms)};
}

SvdRoute build_svd_route(const Eigen::MatrixXcd &m, double eps_d,
                         const Eigen::VectorXcd &v) {
    if (eps_d <= 0.0)
        throw std::invalid_argument("build_svd_route: eps_d must be positive");
    const std::size_t n = qubits_of_dim(m.rows(), "build_svd_route");
    if (m.rows() != m.cols() || v.size() != m.rows())
        throw std::invalid_argument("build_svd_route: dimension mismatch");

    SvdRoute route;
    route.qubit_count = n;
    route.c = (m * v.normalized()).squaredNorm();
    if (route.c < kNormFloor) {
        route.zero_output = true;
        return route;
    }
    route.alpha = std::max(0.0, std::log(2.0 / (route.c * eps_d)) / 2.0);

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
        m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    // M = U D V with V = (Eigen's V)^dag.
    route.u_hamiltonian =
        strip_identity(decompose_dense(principal_generator(svd.matrixU()), n));
    route.u_time = 1.0;
    route.v_hamiltonian = strip_identity(
        decompose_dense(principal_generator(svd.matrixV().adjoint()), n));
    route.v_time = 1.0;

    const auto &s = svd.singularValues();
    const double zero_cut = 1e-10 * s(0);
    Eigen::VectorXcd rates(s.size());
    for (Eigen::Index j = 0; j < s.size(); ++j)
        rates(j) = s(j) > zero_cut ? -std::log(s(j)) : route.alpha;
    Eigen::MatrixXcd h_d = rates.asDiagonal();
    route.d_hamiltonian = decompose_dense(h_d, n);
    route.d_time = 1.0;
    return route;
}

SvdRoute sigma_plus_route(std::size_t qubit, std::size_t qubit_count) {
    SvdRoute route;
    route.qubit_count = qubit_count;
    route.u_hamiltonian = OperatorSum(qubit_count); // U = I
    route.u_time = 0.0;
    route.v_hamiltonian =
        OperatorSum(PauliString::single(Pauli::X, qubit, qubit_count));
    route.v_time = M_PI / 2.0;
    route.d_hamiltonian = projector(0, qubit, qubit_count);
    route.d_time = 6.0;
    route.alpha = 6.0;
    return route;
}

std::vector<double> apply_svd_route(const SvdRoute &route, const Ansatz &ansatz,
                                    const std::vector<double> &theta,
                                    const SvdRouteOptions &options) {
    if (route.zero_output)
        throw std::runtime_error(
            "apply_svd_route: measured norm below floor, the output is the "
            "zero vector");
    if (route.qubit_count != ansatz.qubit_count())
        throw std::invalid_argument("apply_svd_route: qubit count mismatch");
    auto out = run_stage(route.v_hamiltonian, route.v_time, options.v_step,
                         false, ansatz, theta, options);
    out = run_stage(route.d_hamiltonian, route.d_time, options.d_step, true,
                    ansatz, std::move(out), options);
    out = run_stage(route.u_hamiltonian, route.u_time, options.u_step, false,
                    ansatz, std::move(out), options);
    return out;
}

double d_approximation_error(const Eigen::MatrixXcd &d,
                             const Eigen::MatrixXcd &d_alpha,
                             const Eigen::VectorXcd &v) {
    Eigen::VectorXcd exact = d * v;
    double c = exact.squaredNorm();
    if (c < kNormFloor)
        throw std::invalid_argument(
            "d_approximation_error: <v|D^2|v> vanishes");
    Eigen::VectorXcd approx = d_alpha * v;
    double overlap = std::norm(exact.normalized().dot(approx.normalized()));
    return std::max(0.0, 1.0 - overlap);
}

} // namespace vqsim
