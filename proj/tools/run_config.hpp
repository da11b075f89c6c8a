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
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace covpovm::cli {

/// Bad or missing configuration; maps to exit status 1.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class Command {
    husimi_grid,
    povm_element,
    probability,
    covariance_check,
    normalization,
    axb_orthogonality,
    axb_povm,
    injectivity,
};

[[nodiscard]] Command parse_command(const std::string& name);
[[nodiscard]] std::string command_name(Command command);

/// Flat `key = value` configuration; `#` starts a comment, blank lines are ignored.
class RunConfig {
  public:
    [[nodiscard]] static RunConfig parse(const std::string& text, std::filesystem::path base_dir = {});
    [[nodiscard]] static RunConfig load(const std::filesystem::path& path);

    [[nodiscard]] Command command() const { return command_; }
    [[nodiscard]] std::string name() const;
    /// Directory that relative file references resolve against.
    [[nodiscard]] const std::filesystem::path& base_dir() const { return base_dir_; }

    [[nodiscard]] bool has(const std::string& key) const { return values_.count(key) != 0; }
    [[nodiscard]] std::string text(const std::string& key) const;
    [[nodiscard]] std::string text(const std::string& key, const std::string& fallback) const;
    [[nodiscard]] double number(const std::string& key) const;
    [[nodiscard]] double number(const std::string& key, double fallback) const;
    [[nodiscard]] std::size_t count(const std::string& key) const;
    [[nodiscard]] std::size_t count(const std::string& key, std::size_t fallback) const;
    /// Comma separated numbers; `expected` of 0 accepts any length.
    [[nodiscard]] std::vector<double> numbers(const std::string& key, std::size_t expected = 0) const;

    [[nodiscard]] std::filesystem::path resolve(const std::string& file) const;

  private:
    Command command_ = Command::husimi_grid;
    std::map<std::string, std::string> values_;
    std::filesystem::path base_dir_;
};

/// Parses "1.5, -2 ,3" into numbers; ConfigError mentions `what` on failure.
[[nodiscard]] std::vector<double> parse_numbers(const std::string& list, const std::string& what);

}  // namespace covpovm::cli
