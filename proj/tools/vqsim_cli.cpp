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

#include <exception>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "vqsim/experiment.hpp"

namespace {

// --config accepts a file path or a shipped preset name.
std::string resolve_config(const std::string &config) {
    if (std::filesystem::exists(config))
        return config;
    for (const auto &name : vqsim::preset_names())
        if (name == config)
            return vqsim::preset_path(name);
    throw std::runtime_error("config '" + config +
                             "' is neither a file nor a preset name "
                             "(see `vqsim presets`)");
}

struct Overrides {
    std::string out;
    std::string estimator;
    std::uint64_t seed = 0;
    std::size_t workers = 0;
    std::size_t trajectories = 0;
    bool seed_set = false;

    void apply(vqsim::ExperimentConfig &config) const {
        if (!out.empty())
            config.output = out;
        if (!estimator.empty())
            config.estimator = estimator;
        if (seed_set)
            config.seed = seed;
        if (workers)
            config.workers = workers;
        if (trajectories)
            config.trajectories = trajectories;
    }
};

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Variational simulator for generalized quantum evolution"};
    app.require_subcommand(1);

    std::string config_arg;
    Overrides overrides;

    auto add_common = [&](CLI::App *cmd) {
        cmd->add_option("-c,--config", config_arg,
                        "Config file path or preset name")
            ->required();
        cmd->add_option("--seed", overrides.seed, "Master RNG seed override")
            ->each([&](const std::string &) { overrides.seed_set = true; });
        cmd->add_option("--workers", overrides.workers,
                        "Trajectory worker threads override");
        cmd->add_option("--trajectories", overrides.trajectories,
                        "Trajectory count override");
        cmd->add_option("--estimator", overrides.estimator,
                        "Estimator override: exact | shots:N");
    };

    auto *run = app.add_subcommand("run", "Execute an experiment config");
    add_common(run);
    run->add_option("-o,--out", overrides.out, "Output file override");

    auto *validate =
        app.add_subcommand("validate", "Check a config without running it");
    add_common(validate);

    auto *presets =
        app.add_subcommand("presets", "List the shipped preset configs");

    CLI11_PARSE(app, argc, argv);

    try {
        if (presets->parsed()) {
            for (const auto &name : vqsim::preset_names())
                std::cout << name << "\t" << vqsim::preset_path(name) << "\n";
            return 0;
        }

        auto config = vqsim::load_config(resolve_config(config_arg));
        overrides.apply(config);

        if (validate->parsed()) {
            auto report = vqsim::validate_experiment(config);
            for (const auto &message : report.messages)
                std::cout << message << "\n";
            return report.ok ? 0 : 1;
        }

        auto written = vqsim::run_experiment(config);
        for (const auto &path : written)
            std::cout << "wrote " << path << "\n";
        return 0;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
