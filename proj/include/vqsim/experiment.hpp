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
 * JSON experiment configs, deterministic CSV/JSON outputs, and the task
 * runner behind the command-line front end.
 *
 * Dissipative configs support sigma^+ = |1><0| jump channels (the
 * benchmark's dissipation), declared as {"qubit": q, "rate": gamma}.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vqsim/resources.hpp"

namespace vqsim {

struct DecayChannel {
    std::size_t qubit = 0;
    double rate = 1.0;
};

struct ExperimentConfig {
    std::string kind; ///< real-time | imag-time | general | linalg-multiply |
                      ///< linalg-solve | open-system | resources | svd-demo
    std::string name;
    std::size_t qubits = 1;

    /// "ising6" pulls the 6-qubit dissipative Ising benchmark (model,
    /// 54-parameter ansatz, correlation observable, jump routes).
    std::string model_preset;
    std::string hamiltonian;           ///< operator literal
    std::vector<DecayChannel> channels;
    std::string b_operator;            ///< operator literal (general task)
    struct GeneralSource {
        std::string op;   ///< operator literal
        std::string kind; ///< self | frozen-initial
    };
    std::vector<GeneralSource> sources; ///< general task drives

    std::string ansatz_type = "full"; ///< full | hamiltonian
    std::size_t ansatz_layers = 3;
    bool ansatz_scale = false;
    std::vector<double> theta0; ///< empty = zeros

    double duration = 1.0;
    double step = 0.01;
    std::size_t trajectories = 1;
    std::uint64_t seed = 0;
    std::size_t workers = 1;
    std::vector<std::string> observables; ///< operator literals

    std::string estimator = "exact"; ///< "exact" or "shots:N"
    std::string regularization = "tikhonov"; ///< or "truncated"
    double regularization_value = 1e-6;

    std::string matrix;            ///< operator literal (linalg tasks)
    std::string variant = "plain"; ///< plain | normalized (linalg-multiply)
    std::size_t demo_states = 20;  ///< svd-demo sample count

    CostInputs cost; ///< resources task inputs

    std::string output = "out.csv";
    bool per_trajectory_output = false;

    std::string source_path; ///< where the config was loaded from
    std::string raw_json;    ///< resolved config, embedded in the manifest
};

/// Parse a config file; throws std::runtime_error with the offending
/// field on malformed input.
ExperimentConfig load_config(const std::string &path);

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> messages;
};

/// Dry run: parse and dimension checks plus a cost preview; performs no
/// evolution. Problems land in the report instead of throwing.
ValidationReport validate_experiment(const ExperimentConfig &config);

/// Execute the task and write the aggregate CSV (17-significant-digit
/// floats) and the `<output>.manifest.json` run manifest. Returns the
/// paths written.
std::vector<std::string> run_experiment(const ExperimentConfig &config);

/// Preset names shipped in-repo, resolvable by `preset_path`.
std::vector<std::string> preset_names();
std::string preset_path(const std::string &name);

} // namespace vqsim
