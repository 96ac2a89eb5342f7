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

#include "vqsim/engine.hpp"

#include <cmath>
#include <stdexcept>

namespace vqsim {

namespace {

const Complex kImag(0.0, 1.0);

OperatorSum identity_op(std::size_t n) {
    return OperatorSum(PauliString::identity(n));
}

StateVector resolve_source(const SourceTerm &source, const StateVector &self,
                           const AssembleContext &ctx) {
    switch (source.kind) {
    case SourceKind::Self:
        return self;
    case SourceKind::FixedState:
        if (!source.fixed)
            throw std::invalid_argument("assemble: FixedState source missing");
        return *source.fixed;
    case SourceKind::FrozenInitial:
        if (!ctx.frozen_initial)
            throw std::invalid_argument(
                "assemble: FrozenInitial source needs context");
        return *ctx.frozen_initial;
    }
    throw std::logic_error("unreachable");
}

Circuit source_circuit(const SourceTerm &source, const Ansatz &ansatz,
                       const std::vector<double> &theta,
                       const AssembleContext &ctx) {
    if (source.kind == SourceKind::Self)
        return ansatz.circuit(theta);
    Circuit c(ansatz.qubit_count());
    c.add_raw_state(resolve_source(source, StateVector(ansatz.qubit_count()),
                                   ctx));
    return c;
}

// Value of sum of Re(c * <left|sigma|right>) terms through the estimator.
double estimate_term(const Circuit &left, const Circuit &right,
                     const std::optional<PauliString> &insertion, Complex c,
                     CircuitTemplate kind, const EstimatorMode &mode,
                     std::mt19937_64 &rng) {
    OverlapTask task{left, right, std::arg(c), std::abs(c), kind};
    if (insertion)
        task.right.add_pauli(*insertion);
    if (mode.is_exact())
        return exact_overlap(task);
    return sampled_overlap(task, mode.shots, rng).estimate;
}

struct BranchState {
    Complex weight;
    Circuit circuit;
};

} // namespace

SourceTerm constant_source(OperatorSum op, SourceKind kind,
                           std::optional<StateVector> fixed) {
    SourceTerm s;
    s.op = [op = std::move(op)](double, const StateVector &) { return op; };
    s.kind = kind;
    s.fixed = std::move(fixed);
    return s;
}

void GeneralizedEvolutionProblem::validate() const {
    if (step <= 0.0)
        throw std::invalid_argument("problem: step must be positive");
    if (duration < step)
        throw std::invalid_argument("problem: duration must be >= step");
    for (const auto &s : sources) {
        if (!s.op)
            throw std::invalid_argument("problem: source without operator");
        if (s.kind == SourceKind::FixedState && !s.fixed)
            throw std::invalid_argument("problem: FixedState without state");
    }
}

StepMatrices assemble(const GeneralizedEvolutionProblem &problem,
                      const Ansatz &ansatz, const std::vector<double> &theta,
                      double t, const EstimatorMode &mode,
                      const AssembleContext &ctx) {
    const std::size_t n = ansatz.qubit_count();
    if (problem.qubit_count != n)
        throw std::invalid_argument("assemble: qubit count mismatch");
    const std::size_t params = ansatz.param_count();
    StepMatrices out{Eigen::MatrixXd::Zero(params, params),
                     Eigen::VectorXd::Zero(params)};

    const bool b_identity = problem.b_is_identity();
    OperatorSum b = b_identity ? identity_op(n) : problem.b_op(t);

    if (mode.is_exact()) {
        auto frame = ansatz.tangent_frame(theta);
        // w_k = B |d_k v>; M_kj = Re<w_k|w_j> is symmetric by construction.
        std::vector<StateVector> w;
        w.reserve(params);
        for (const auto &d : frame.derivatives)
            w.push_back(b_identity ? d : apply(b, d));
        for (std::size_t k = 0; k < params; ++k)
            for (std::size_t j = k; j < params; ++j) {
                double m = inner(w[k], w[j]).real();
                out.m(k, j) = m;
                out.m(j, k) = m;
            }
        // rhs = sum_j A_j |v'_j>; V_k = Re<w_k| rhs> since <B d_k|A v'> =
        // <d_k|B^dag A|v'>.
        StateVector rhs(n);
        rhs.scale(0.0);
        for (const auto &source : problem.sources) {
            OperatorSum a = source.op(t, frame.state);
            StateVector src = resolve_source(source, frame.state, ctx);
            rhs.add_scaled(1.0, apply(a, src));
        }
        for (std::size_t k = 0; k < params; ++k)
            out.v(k) = inner(w[k], rhs).real();
        return out;
    }

    // Shots mode: decompose every entry into Hadamard-test tasks.
    std::mt19937_64 local_rng(mode.seed);
    std::mt19937_64 &rng = ctx.rng ? *ctx.rng : local_rng;

    std::vector<std::vector<BranchState>> branches(params);
    for (std::size_t k = 0; k < params; ++k)
        for (auto &br : ansatz.derivative_branches(theta, k))
            branches[k].push_back({br.weight, br.circuit});

    OperatorSum bdb = b_identity ? identity_op(n) : b.adjoint() * b;
    const bool bdb_identity = b_identity || bdb.is_identity();
    for (std::size_t k = 0; k < params; ++k)
        for (std::size_t j = k; j < params; ++j) {
            double m = 0.0;
            for (const auto &bk : branches[k])
                for (const auto &bj : branches[j])
                    for (const auto &term : bdb.terms()) {
                        Complex c = std::conj(bk.weight) * bj.weight *
                                    term.coefficient();
                        std::optional<PauliString> ins;
                        CircuitTemplate kind = CircuitTemplate::GatePairOverlap;
                        if (!(bdb_identity && term.is_identity())) {
                            ins = PauliString(1.0, term.factors());
                            kind = CircuitTemplate::SandwichOverlap;
                        }
                        m += estimate_term(bk.circuit, bj.circuit, ins, c,
                                           kind, mode, rng);
                    }
            out.m(k, j) = m;
            out.m(j, k) = m;
        }

    StateVector self = ansatz.prepare(theta);
    for (const auto &source : problem.sources) {
        OperatorSum a = source.op(t, self);
        OperatorSum bda = b_identity ? a : b.adjoint() * a;
        Circuit prep = source_circuit(source, ansatz, theta, ctx);
        CircuitTemplate kind = source.kind == SourceKind::Self
                                   ? CircuitTemplate::GateInsertOverlap
                                   : CircuitTemplate::DistinctPrepOverlap;
        for (std::size_t k = 0; k < params; ++k) {
            double v = 0.0;
            for (const auto &bk : branches[k])
                for (const auto &term : bda.terms()) {
                    Complex c = std::conj(bk.weight) * term.coefficient();
                    std::optional<PauliString> ins;
                    if (!term.is_identity())
                        ins = PauliString(1.0, term.factors());
                    v += estimate_term(bk.circuit, prep, ins, c, kind, mode,
                                       rng);
                }
            out.v(k) += v;
        }
    }
    return out;
}

Eigen::VectorXd solve_step(const StepMatrices &m, const Regularization &reg) {
    const auto dim = m.m.rows();
    if (dim != m.m.cols() || dim != m.v.size())
        throw std::invalid_argument("solve_step: shape mismatch");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.m);
    Eigen::VectorXd projected = es.eigenvectors().transpose() * m.v;
    Eigen::VectorXd filtered(dim);
    if (reg.kind == Regularization::Kind::Tikhonov) {
        double lambda = reg.value * m.m.trace() / static_cast<double>(dim);
        for (Eigen::Index i = 0; i < dim; ++i) {
            double e = es.eigenvalues()(i);
            double denom = e * e + lambda * lambda;
            filtered(i) = denom > 0.0 ? projected(i) * e / denom : 0.0;
        }
    } else {
        for (Eigen::Index i = 0; i < dim; ++i) {
            double e = es.eigenvalues()(i);
            filtered(i) = std::abs(e) > reg.value ? projected(i) / e : 0.0;
        }
    }
    return es.eigenvectors() * filtered;
}

double estimate_expectation(const OperatorSum &op, const Ansatz &ansatz,
                            const std::vector<double> &theta,
                            const EstimatorMode &mode, std::mt19937_64 *rng) {
    if (mode.is_exact())
        return expectation(op, ansatz.prepare(theta)).real();
    std::mt19937_64 local_rng(mode.seed);
    std::mt19937_64 &stream = rng ? *rng : local_rng;
    Circuit prep = ansatz.circuit(theta);
    double acc = 0.0;
    for (const auto &term : op.terms()) {
        std::optional<PauliString> ins;
        if (!term.is_identity())
            ins = PauliString(1.0, term.factors());
        acc += estimate_term(prep, prep, ins, term.coefficient(),
                             CircuitTemplate::GateInsertOverlap, mode, stream);
    }
    return acc;
}

TimeSeries evolve(const GeneralizedEvolutionProblem &problem,
                  const Ansatz &ansatz, const std::vector<double> &theta0,
                  const std::vector<OperatorSum> &observables,
                  const EvolveOptions &options) {
    problem.validate();
    const auto steps = static_cast<std::size_t>(
        std::llround(problem.duration / problem.step));
    if (steps == 0)
        throw std::invalid_argument("evolve: zero steps");

    std::vector<double> theta = theta0;
    std::mt19937_64 rng(options.estimator.seed);
    AssembleContext ctx;
    ctx.frozen_initial = ansatz.prepare(theta0);
    ctx.rng = &rng;

    TimeSeries series;
    auto record = [&](double t) {
        series.times.push_back(t);
        if (options.record_theta)
            series.thetas.push_back(theta);
        std::vector<double> row;
        row.reserve(observables.size());
        StateVector state = ansatz.prepare(theta);
        for (const auto &obs : observables)
            row.push_back(expectation(obs, state).real());
        series.observables.push_back(std::move(row));
    };
    record(0.0);

    for (std::size_t i = 0; i < steps; ++i) {
        const double t = static_cast<double>(i) * problem.step;
        StepMatrices m =
            assemble(problem, ansatz, theta, t, options.estimator, ctx);
        Eigen::VectorXd dtheta = solve_step(m, options.regularization);
        if (!dtheta.allFinite())
            throw std::runtime_error("evolve: non-finite parameter derivative "
                                     "at step " +
                                     std::to_string(i));
        for (std::size_t p = 0; p < theta.size(); ++p)
            theta[p] += dtheta(static_cast<Eigen::Index>(p)) * problem.step;
        record(static_cast<double>(i + 1) * problem.step);
    }
    return series;
}

GeneralizedEvolutionProblem real_time_problem(const OperatorSum &hamiltonian,
                                              double duration, double step) {
    if (!hamiltonian.is_hermitian())
        throw std::invalid_argument(
            "real_time_problem: Hamiltonian must be Hermitian");
    GeneralizedEvolutionProblem problem;
    problem.qubit_count = hamiltonian.qubit_count();
    problem.duration = duration;
    problem.step = step;
    problem.sources.push_back(constant_source(-kImag * hamiltonian));
    return problem;
}

GeneralizedEvolutionProblem imag_time_problem(const OperatorSum &hamiltonian,
                                              double duration, double step) {
    if (!hamiltonian.is_hermitian())
        throw std::invalid_argument(
            "imag_time_problem: Hamiltonian must be Hermitian");
    GeneralizedEvolutionProblem problem;
    problem.qubit_count = hamiltonian.qubit_count();
    problem.duration = duration;
    problem.step = step;
    SourceTerm source;
    source.op = [hamiltonian](double, const StateVector &state) {
        double energy = expectation(hamiltonian, state).real() /
                        state.norm_squared();
        return Complex(-1.0) * hamiltonian +
               Complex(energy) *
                   OperatorSum(PauliString::identity(hamiltonian.qubit_count()));
    };
    source.kind = SourceKind::Self;
    problem.sources.push_back(std::move(source));
    return problem;
}

StepMatrices real_time_coeffs(const Ansatz &ansatz,
                              const std::vector<double> &theta,
                              const OperatorSum &hamiltonian) {
    auto problem = real_time_problem(hamiltonian, 1.0, 1.0);
    return assemble(problem, ansatz, theta, 0.0, EstimatorMode::exact());
}

StepMatrices imag_time_coeffs(const Ansatz &ansatz,
                              const std::vector<double> &theta,
                              const OperatorSum &hamiltonian) {
    auto problem = imag_time_problem(hamiltonian, 1.0, 1.0);
    return assemble(problem, ansatz, theta, 0.0, EstimatorMode::exact());
}

} // namespace vqsim
