// Copyright 2026 The covpovm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"covpovm: covariant phase-space and wavelet POVMs"};
    std::string config_path;
    covpovm::cli::RunOptions options;
    app.add_option("config", config_path, "run configuration (key = value per line)")->required();
    app.add_option("--out", options.out_dir, "output directory");
    std::uint64_t seed = 0;
    auto* seed_opt = app.add_option("--seed", seed, "RNG seed for randomized checks");
    app.add_option("--threads", options.threads, "worker threads for quadrature")->check(CLI::PositiveNumber);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : covpovm::cli::kExitValidation;
    }
    if (seed_opt->count() != 0) options.seed = seed;
    return covpovm::cli::run_file(config_path, options, std::cerr);
}
