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

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>

#include "run_config.hpp"

namespace covpovm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitCheckFailed = 2;

struct RunOptions {
    std::filesystem::path out_dir = ".";
    /// Overrides the config's `seed` key when set.
    std::optional<std::uint64_t> seed;
    unsigned threads = 1;
};

/// Executes one configured command, writing `<name>.report.json` plus a matrix or heatmap
/// where the command produces one. Returns 0, 1 (validation error) or 2 (a checked
/// invariant exceeded its tolerance). Diagnostics go to `log`.
int run(const RunConfig& config, const RunOptions& options, std::ostream& log);

/// Loads the config file first; an unreadable or malformed file yields 1.
int run_file(const std::filesystem::path& config_path, const RunOptions& options, std::ostream& log);

}  // namespace covpovm::cli
