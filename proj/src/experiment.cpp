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

#include "vqsim/experiment.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "vqsim/engine.hpp"
#include "vqsim/linalg.hpp"
#include "vqsim/open_system.hpp"
#include "vqsim/oracles.hpp"

#ifndef VQSIM_PRESET_DIR
#define VQSIM_PRESET_DIR "presets"
#endif

namespace vqsim {

namespace {

using nlohmann::json;

constexpr const char *kVersion = "0.1.0";

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

EstimatorMode parse_estimator(const std::string &text, std::uint64_t seed) {
    if (text == "exact")
        return EstimatorMode::exact();
    if (text.rfind("shots:", 0) == 0) {
        std::uint64_t shots = std::stoull(text.substr(6));
        if (shots == 0)
            throw std::runtime_error("estimator: shot count must be positive");
        return EstimatorMode::with_shots(shots, seed);
    }
    throw std::runtime_error("estimator: expected 'exact' or 'shots:N', got '" +
                             text + "'");
}

Regularization parse_regularization(const ExperimentConfig &config) {
    if (config.regularization == "tikhonov")
        return Regularization::tikhonov(config.regularization_value);
    if (config.regularization == "truncated")
        return Regularization::truncated(config.regularization_value);
    throw std::runtime_error("regularization: expected 'tikhonov' or "
                             "'truncated', got '" +
                             config.regularization + "'");
}

struct ResolvedExperiment {
    std::size_t qubits = 0;
    OperatorSum hamiltonian;
    std::vector<OperatorSum> lindblads;
    std::vector<SvdRoute> routes;
    Ansatz ansatz;
    std::vector<double> theta0;
    std::vector<OperatorSum> observables;
    std::vector<std::string> observable_names;

    ResolvedExperiment() : hamiltonian(1), ansatz(StateVector(1), {}) {}
};

bool needs_model(const std::string &kind) {
    return kind == "real-time" || kind == "imag-time" ||
           kind == "open-system" || kind == "general";
}

ResolvedExperiment resolve(const ExperimentConfig &config) {
    ResolvedExperiment r;
    if (config.model_preset == "ising6") {
        auto bench = build_ising_benchmark();
        r.qubits = 6;
        r.hamiltonian = bench.model.hamiltonian();
        r.lindblads = bench.model.lindblad_ops();
        r.routes = bench.jump_routes;
        r.ansatz = bench.ansatz;
        if (config.observables.empty()) {
            r.observables = {bench.observable};
            r.observable_names = {"C"};
        }
    } else if (!config.model_preset.empty()) {
        throw std::runtime_error("unknown model preset '" +
                                 config.model_preset + "'");
    } else {
        r.qubits = config.qubits;
        r.hamiltonian = config.hamiltonian.empty()
                            ? OperatorSum(r.qubits)
                            : OperatorSum::parse(config.hamiltonian, r.qubits);
        for (const auto &channel : config.channels) {
            if (channel.qubit >= r.qubits)
                throw std::runtime_error("decay channel qubit out of range");
            r.lindblads.push_back(Complex(std::sqrt(channel.rate)) *
                                  raising_op(channel.qubit, r.qubits));
            r.routes.push_back(sigma_plus_route(channel.qubit, r.qubits));
        }
        if (config.ansatz_type == "hamiltonian") {
            if (r.qubits != 6)
                throw std::runtime_error(
                    "ansatz 'hamiltonian' is the 6-qubit benchmark circuit");
            r.ansatz = build_hamiltonian_ansatz();
        } else if (config.ansatz_type == "full") {
            bool scale = config.ansatz_scale ||
                         config.kind == "linalg-multiply" ||
                         config.kind == "linalg-solve";
            if (config.kind == "linalg-multiply" &&
                config.variant == "normalized")
                scale = config.ansatz_scale;
            r.ansatz = build_full_ansatz(r.qubits, config.ansatz_layers, scale);
        } else {
            throw std::runtime_error("unknown ansatz type '" +
                                     config.ansatz_type + "'");
        }
    }
    if (r.observables.empty()) {
        for (std::size_t i = 0; i < config.observables.size(); ++i) {
            r.observables.push_back(
                OperatorSum::parse(config.observables[i], r.qubits));
            r.observable_names.push_back("o" + std::to_string(i + 1));
        }
    }
    if (config.theta0.empty()) {
        r.theta0.assign(r.ansatz.param_count(), 0.0);
        if (r.ansatz.scale_enabled())
            r.theta0[r.ansatz.scale_r_slot()] = 1.0;
    } else {
        if (config.theta0.size() != r.ansatz.param_count())
            throw std::runtime_error(
                "theta0 length does not match the ansatz parameter count");
        r.theta0 = config.theta0;
    }
    return r;
}

void write_csv(const std::string &path,
               const std::vector<std::string> &header,
               const std::vector<std::vector<double>> &rows) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open output file '" + path + "'");
    for (std::size_t c = 0; c < header.size(); ++c)
        out << (c ? "," : "") << header[c];
    out << "\n";
    for (const auto &row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            out << (c ? "," : "") << fmt17(row[c]);
        out << "\n";
    }
}

json manifest_base(const ExperimentConfig &config) {
    json m;
    m["version"] = kVersion;
    m["config"] = json::parse(config.raw_json);
    m["config_path"] = config.source_path;
    m["seed"] = config.seed;
    m["workers"] = config.workers;
    m["estimator"] = config.estimator;
    return m;
}

std::vector<std::string> finish(const ExperimentConfig &config, json manifest,
                                std::vector<std::string> outputs,
                                double wall_seconds) {
    manifest["outputs"] = outputs;
    manifest["wall_time_seconds"] = wall_seconds;
    std::string path = config.output + ".manifest.json";
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open manifest file '" + path + "'");
    out << manifest.dump(2) << "\n";
    outputs.push_back(path);
    return outputs;
}

std::vector<std::vector<double>>
series_rows(const TimeSeries &series) {
    std::vector<std::vector<double>> rows;
    rows.reserve(series.times.size());
    for (std::size_t t = 0; t < series.times.size(); ++t) {
        std::vector<double> row{series.times[t]};
        row.insert(row.end(), series.observables[t].begin(),
                   series.observables[t].end());
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::string> run_evolution(const ExperimentConfig &config,
                                       const ResolvedExperiment &r,
                                       json manifest, double t0_wall) {
    GeneralizedEvolutionProblem problem;
    if (config.kind == "real-time") {
        problem = real_time_problem(r.hamiltonian, config.duration,
                                    config.step);
    } else if (config.kind == "imag-time") {
        problem = imag_time_problem(r.hamiltonian, config.duration,
                                    config.step);
    } else { // general
        problem.qubit_count = r.qubits;
        problem.duration = config.duration;
        problem.step = config.step;
        if (!config.b_operator.empty()) {
            auto b = OperatorSum::parse(config.b_operator, r.qubits);
            problem.b_op = [b](double) { return b; };
        }
        for (const auto &source : config.sources) {
            auto op = OperatorSum::parse(source.op, r.qubits);
            SourceKind kind;
            if (source.kind == "self")
                kind = SourceKind::Self;
            else if (source.kind == "frozen-initial")
                kind = SourceKind::FrozenInitial;
            else
                throw std::runtime_error("unknown source kind '" +
                                         source.kind + "'");
            problem.sources.push_back(constant_source(op, kind));
        }
        if (problem.sources.empty())
            throw std::runtime_error("general task needs at least one source");
    }

    EvolveOptions options;
    options.regularization = parse_regularization(config);
    options.estimator = parse_estimator(config.estimator, config.seed);
    auto series = evolve(problem, r.ansatz, r.theta0, r.observables, options);

    std::vector<std::string> header{"t"};
    header.insert(header.end(), r.observable_names.begin(),
                  r.observable_names.end());
    write_csv(config.output, header, series_rows(series));
    manifest["final_theta"] = series.thetas.back();
    double wall = std::chrono::duration<double>(
                      std::chrono::steady_clock::now().time_since_epoch())
                      .count() -
                  t0_wall;
    return finish(config, std::move(manifest), {config.output}, wall);
}

std::vector<std::string> run_linalg(const ExperimentConfig &config,
                                    const ResolvedExperiment &r,
                                    json manifest, double t0_wall) {
    if (config.matrix.empty())
        throw std::runtime_error("linalg task needs a 'matrix' literal");
    auto m = OperatorSum::parse(config.matrix, r.qubits);
    LinalgOptions options;
    options.step = config.step;
    options.regularization = parse_regularization(config);
    options.estimator = parse_estimator(config.estimator, config.seed);

    LinalgResult result = [&] {
        if (config.kind == "linalg-solve")
            return solve_linear_system(m, r.ansatz, r.theta0, options);
        if (config.variant == "normalized")
            return multiply_via_normalized_path(m, r.ansatz, r.theta0,
                                                options);
        if (config.variant != "plain")
            throw std::runtime_error("unknown linalg variant '" +
                                     config.variant + "'");
        return multiply_via_path(m, r.ansatz, r.theta0, options);
    }();

    // Tabulate observables (or the state norm) along the path.
    std::vector<std::string> header{"t"};
    if (r.observables.empty())
        header.push_back("norm");
    else
        header.insert(header.end(), r.observable_names.begin(),
                      r.observable_names.end());
    std::vector<std::vector<double>> rows;
    for (std::size_t t = 0; t < result.series.times.size(); ++t) {
        auto state = r.ansatz.prepare(result.series.thetas[t]);
        std::vector<double> row{result.series.times[t]};
        if (r.observables.empty()) {
            row.push_back(state.norm());
        } else {
            for (const auto &obs : r.observables)
                row.push_back(expectation(obs, state).real() /
                              state.norm_squared());
        }
        rows.push_back(std::move(row));
    }
    write_csv(config.output, header, rows);
    manifest["final_theta"] = result.theta;
    manifest["final_scale"] = {result.scale.real(), result.scale.imag()};
    double wall = std::chrono::duration<double>(
                      std::chrono::steady_clock::now().time_since_epoch())
                      .count() -
                  t0_wall;
    return finish(config, std::move(manifest), {config.output}, wall);
}

std::vector<std::string> run_open_system(const ExperimentConfig &config,
                                         const ResolvedExperiment &r,
                                         json manifest, double t0_wall) {
    LindbladModel model(r.hamiltonian, r.lindblads);
    TrajectoryOptions options;
    options.duration = config.duration;
    options.step = config.step;
    options.regularization = parse_regularization(config);
    options.estimator = parse_estimator(config.estimator, config.seed);
    options.observables = r.observables;
    options.jump_routes = r.routes;

    auto records =
        run_trajectories(model, r.ansatz, r.theta0, options, config.seed,
                         config.trajectories, config.workers);
    auto avg = average_trajectories(records);

    std::vector<std::string> header{"t"};
    for (const auto &name : r.observable_names) {
        header.push_back(name + "_mean");
        header.push_back(name + "_stderr");
    }
    std::vector<std::vector<double>> rows;
    for (std::size_t t = 0; t < avg.times.size(); ++t) {
        std::vector<double> row{avg.times[t]};
        for (std::size_t o = 0; o < r.observables.size(); ++o) {
            row.push_back(avg.mean[t][o]);
            row.push_back(avg.std_error[t][o]);
        }
        rows.push_back(std::move(row));
    }
    write_csv(config.output, header, rows);

    std::vector<std::string> outputs{config.output};
    if (config.per_trajectory_output) {
        for (std::size_t i = 0; i < records.size(); ++i) {
            std::string path =
                config.output + ".traj" + std::to_string(i) + ".csv";
            std::vector<std::string> traj_header{"t"};
            traj_header.insert(traj_header.end(), r.observable_names.begin(),
                               r.observable_names.end());
            std::vector<std::vector<double>> traj_rows;
            for (std::size_t t = 0; t < records[i].times.size(); ++t) {
                std::vector<double> row{records[i].times[t]};
                row.insert(row.end(), records[i].observables[t].begin(),
                           records[i].observables[t].end());
                traj_rows.push_back(std::move(row));
            }
            write_csv(path, traj_header, traj_rows);
            outputs.push_back(path);
        }
    }

    double total_jumps = 0.0;
    for (const auto &rec : records)
        total_jumps += static_cast<double>(rec.jumps.size());
    manifest["trajectories"] = records.size();
    manifest["mean_jumps_per_trajectory"] =
        total_jumps / static_cast<double>(records.size());
    double wall = std::chrono::duration<double>(
                      std::chrono::steady_clock::now().time_since_epoch())
                      .count() -
                  t0_wall;
    return finish(config, std::move(manifest), std::move(outputs), wall);
}

std::vector<std::string> run_resources(const ExperimentConfig &config,
                                       json manifest, double t0_wall) {
    config.cost.validate();
    json table;
    table["n_s"] = shots_per_term(config.cost);
    auto budget = steps_required(config.cost);
    table["n_a"] = budget.steps;
    table["dt"] = budget.step;
    table["n_i"] = circuits_per_step(config.cost);
    table["n_tot"] = total_measurements(config.cost, false);
    if (config.cost.eps_a > config.cost.eps_d)
        table["n_tot_svd"] = total_measurements(config.cost, true);
    auto jumps = jump_budget(config.cost);
    table["jump_bound"] = jumps.bound;
    table["jump_bound_local"] = jumps.local_bound;
    table["alpha"] =
        alpha_for_accuracy(config.cost.c, config.cost.eps_d);

    std::ofstream out(config.output);
    if (!out)
        throw std::runtime_error("cannot open output file '" + config.output +
                                 "'");
    out << table.dump(2) << "\n";
    manifest["resources"] = table;
    double wall = std::chrono::duration<double>(
                      std::chrono::steady_clock::now().time_since_epoch())
                      .count() -
                  t0_wall;
    return finish(config, std::move(manifest), {config.output}, wall);
}

std::vector<std::string> run_svd_demo(const ExperimentConfig &config,
                                      json manifest, double t0_wall) {
    // Apply the sigma^+ jump route to a sweep of single-qubit states
    // cos(a)|0> + sin(a)|1> and report fidelity with the exact normalized
    // jump output |1>.
    auto ansatz = build_full_ansatz(1, 3);
    auto route = sigma_plus_route(0, 1);
    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> angle_dist(0.05, 1.25);

    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < config.demo_states; ++i) {
        double angle = angle_dist(rng);
        std::vector<double> theta(ansatz.param_count(), 0.0);
        theta[2] = angle; // layer-0 Y rotation
        double rate = std::cos(angle) * std::cos(angle); // <L^dag L>/gamma
        auto out_theta = apply_svd_route(route, ansatz, theta);
        auto state = ansatz.prepare(out_theta);
        double fidelity =
            std::norm(state.amplitude(1)) / state.norm_squared();
        rows.push_back({static_cast<double>(i), angle, rate, fidelity});
    }
    write_csv(config.output, {"index", "angle", "jump_rate", "fidelity"},
              rows);
    double wall = std::chrono::duration<double>(
                      std::chrono::steady_clock::now().time_since_epoch())
                      .count() -
                  t0_wall;
    return finish(config, std::move(manifest), {config.output}, wall);
}

} // namespace

ExperimentConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("config file '" + path + "' does not exist");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error &e) {
        throw std::runtime_error("config '" + path + "': " + e.what());
    }

    ExperimentConfig config;
    config.source_path = path;
    auto get = [&](const char *key, auto fallback) {
        using T = decltype(fallback);
        if (!j.contains(key))
            return fallback;
        try {
            return j.at(key).template get<T>();
        } catch (const json::exception &e) {
            throw std::runtime_error(std::string("config field '") + key +
                                     "': " + e.what());
        }
    };
    config.kind = get("task", std::string());
    if (config.kind.empty())
        throw std::runtime_error("config: missing 'task'");
    config.name = get("name", std::string());
    config.qubits = get("qubits", std::size_t(1));
    config.model_preset = get("model_preset", std::string());
    config.hamiltonian = get("hamiltonian", std::string());
    config.b_operator = get("b_operator", std::string());
    if (j.contains("sources"))
        for (const auto &s : j.at("sources"))
            config.sources.push_back({s.at("op").get<std::string>(),
                                      s.value("kind", std::string("self"))});
    if (j.contains("channels"))
        for (const auto &c : j.at("channels"))
            config.channels.push_back({c.at("qubit").get<std::size_t>(),
                                       c.value("rate", 1.0)});
    config.ansatz_type = get("ansatz", std::string("full"));
    config.ansatz_layers = get("ansatz_layers", std::size_t(3));
    config.ansatz_scale = get("ansatz_scale", false);
    config.theta0 = get("theta0", std::vector<double>());
    config.duration = get("duration", 1.0);
    config.step = get("step", 0.01);
    config.trajectories = get("trajectories", std::size_t(1));
    config.seed = get("seed", std::uint64_t(0));
    config.workers = get("workers", std::size_t(1));
    config.observables = get("observables", std::vector<std::string>());
    config.estimator = get("estimator", std::string("exact"));
    config.regularization = get("regularization", std::string("tikhonov"));
    config.regularization_value = get("regularization_value", 1e-6);
    config.matrix = get("matrix", std::string());
    config.variant = get("variant", std::string("plain"));
    config.demo_states = get("demo_states", std::size_t(20));
    config.output = get("output", std::string("out.csv"));
    config.per_trajectory_output = get("per_trajectory_output", false);
    if (j.contains("cost")) {
        const auto &c = j.at("cost");
        config.cost.b_norm_max = c.value("b_norm_max", 1.0);
        config.cost.delta_max = c.value("delta_max", 1.0);
        config.cost.delta3_max = c.value("delta3_max", 1.0);
        config.cost.duration = c.value("duration", 1.0);
        config.cost.eps_i = c.value("eps_i", 0.5);
        config.cost.eps_a = c.value("eps_a", 0.5);
        config.cost.eps_d = c.value("eps_d", 0.1);
        config.cost.n_p = c.value("n_p", std::uint64_t(1));
        config.cost.n_d = c.value("n_d", std::uint64_t(1));
        config.cost.n_b = c.value("n_b", std::uint64_t(1));
        config.cost.n_bdb = c.value("n_bdb", std::uint64_t(1));
        config.cost.n_aj = c.value("n_aj", std::uint64_t(1));
        config.cost.n_aj_terms = c.value("n_aj_terms", std::uint64_t(1));
        config.cost.n_h = c.value("n_h", std::uint64_t(1));
        config.cost.svd_duration = c.value("svd_duration", 1.0);
        config.cost.c = c.value("c", 1.0);
        config.cost.l_infinity_norms =
            c.value("l_infinity_norms", std::vector<double>());
    }
    config.raw_json = j.dump();
    return config;
}

ValidationReport validate_experiment(const ExperimentConfig &config) {
    ValidationReport report;
    auto fail = [&](const std::string &message) {
        report.ok = false;
        report.messages.push_back("error: " + message);
    };
    if (config.step <= 0.0)
        fail("step must be positive");
    if (config.kind != "resources" && config.kind != "svd-demo" &&
        config.duration < config.step)
        fail("duration must be at least one step");
    try {
        parse_estimator(config.estimator, config.seed);
        parse_regularization(config);
    } catch (const std::exception &e) {
        fail(e.what());
    }
    if (config.kind == "resources") {
        try {
            config.cost.validate();
            report.messages.push_back("OK, resource formula inputs valid");
        } catch (const std::exception &e) {
            fail(e.what());
        }
        return report;
    }
    if (config.kind == "svd-demo") {
        if (report.ok)
            report.messages.push_back("OK, sigma+ route demo on " +
                                      std::to_string(config.demo_states) +
                                      " states");
        return report;
    }
    try {
        auto r = resolve(config);
        std::size_t steps = static_cast<std::size_t>(
            std::llround(config.duration / config.step));
        std::ostringstream os;
        os << "OK, " << r.ansatz.param_count() << " parameters, " << r.qubits
           << " qubits, " << steps << " steps";
        report.messages.push_back(os.str());

        if (needs_model(config.kind) && !r.lindblads.empty()) {
            LindbladModel model(r.hamiltonian, r.lindblads);
            double gamma = 0.0;
            auto state = r.ansatz.prepare(r.theta0);
            for (std::size_t k = 0; k < model.channel_count(); ++k)
                gamma +=
                    expectation(model.channel_rate_op(k), state).real();
            if (gamma * config.step > 0.1)
                report.messages.push_back(
                    "warning: gamma*dt = " + fmt17(gamma * config.step) +
                    " > 0.1, first-order jump probabilities degrade");
        }

        CostInputs preview;
        preview.n_p = r.ansatz.param_count();
        preview.duration = std::max(config.duration, 1e-12);
        report.messages.push_back(
            "cost preview: " + std::to_string(circuits_per_step(preview)) +
            " circuits per step (unit operator counts)");
    } catch (const std::exception &e) {
        fail(e.what());
    }
    return report;
}

std::vector<std::string> run_experiment(const ExperimentConfig &config) {
    double t0_wall = std::chrono::duration<double>(
                         std::chrono::steady_clock::now().time_since_epoch())
                         .count();
    json manifest = manifest_base(config);
    if (config.kind == "resources")
        return run_resources(config, std::move(manifest), t0_wall);
    if (config.kind == "svd-demo")
        return run_svd_demo(config, std::move(manifest), t0_wall);

    auto r = resolve(config);
    if (config.kind == "real-time" || config.kind == "imag-time" ||
        config.kind == "general")
        return run_evolution(config, r, std::move(manifest), t0_wall);
    if (config.kind == "linalg-multiply" || config.kind == "linalg-solve")
        return run_linalg(config, r, std::move(manifest), t0_wall);
    if (config.kind == "open-system")
        return run_open_system(config, r, std::move(manifest), t0_wall);
    throw std::runtime_error("unknown task '" + config.kind + "'");
}

std::vector<std::string> preset_names() {
    return {"fig3-ideal", "fig3-dissipative", "fig3-dissipative-desk",
            "single-qubit-decay", "svd-jump-demo"};
}

std::string preset_path(const std::string &name) {
    namespace fs = std::filesystem;
    fs::path path = fs::path(VQSIM_PRESET_DIR) / (name + ".json");
    if (!fs::exists(path))
        throw std::runtime_error("preset '" + name + "' not found at " +
                                 path.string());
    return path.string();
}

} // namespace vqsim
