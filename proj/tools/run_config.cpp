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

#include "run_config.hpp"

#include <array>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <utility>

namespace covpovm::cli {

namespace {

constexpr std::array<std::pair<Command, const char*>, 8> kCommands{{
    {Command::husimi_grid, "husimi-grid"},
    {Command::povm_element, "povm-element"},
    {Command::probability, "probability"},
    {Command::covariance_check, "covariance-check"},
    {Command::normalization, "normalization"},
    {Command::axb_orthogonality, "axb-orthogonality"},
    {Command::axb_povm, "axb-povm"},
    {Command::injectivity, "injectivity"},
}};

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double to_double(const std::string& raw, const std::string& what) {
    const std::string s = trim(raw);
    if (s.empty()) throw ConfigError(what + ": empty number");
    char* end = nullptr;
    errno = 0;
    const double value = std::strtod(s.c_str(), &end);
    if (errno != 0 || end != s.c_str() + s.size()) throw ConfigError(what + ": '" + s + "' is not a number");
    return value;
}

}  // namespace

Command parse_command(const std::string& name) {
    for (const auto& [command, text] : kCommands) {
        if (name == text) return command;
    }
    throw ConfigError("unknown command '" + name + "'");
}

std::string command_name(Command command) {
    for (const auto& [c, text] : kCommands) {
        if (c == command) return text;
    }
    return "unknown";
}

std::vector<double> parse_numbers(const std::string& list, const std::string& what) {
    std::vector<double> out;
    std::stringstream stream(list);
    std::string item;
    while (std::getline(stream, item, ',')) out.push_back(to_double(item, what));
    return out;
}

RunConfig RunConfig::parse(const std::string& text, std::filesystem::path base_dir) {
    RunConfig config;
    config.base_dir_ = std::move(base_dir);
    std::stringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
        if (!config.values_.emplace(key, value).second) {
            throw ConfigError("config line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
        }
    }
    if (!config.has("command")) throw ConfigError("config: missing required key 'command'");
    config.command_ = parse_command(config.text("command"));
    return config;
}

RunConfig RunConfig::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str(), path.parent_path());
}

std::string RunConfig::name() const { return text("name", command_name(command_)); }

std::string RunConfig::text(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) throw ConfigError("config: missing required key '" + key + "'");
    return it->second;
}

std::string RunConfig::text(const std::string& key, const std::string& fallback) const {
    return has(key) ? text(key) : fallback;
}

double RunConfig::number(const std::string& key) const { return to_double(text(key), "config key '" + key + "'"); }

double RunConfig::number(const std::string& key, double fallback) const { return has(key) ? number(key) : fallback; }

std::size_t RunConfig::count(const std::string& key) const {
    const double value = number(key);
    if (!(value >= 0.0) || value != static_cast<double>(static_cast<std::size_t>(value))) {
        throw ConfigError("config key '" + key + "': expected a nonnegative integer");
    }
    return static_cast<std::size_t>(value);
}

std::size_t RunConfig::count(const std::string& key, std::size_t fallback) const {
    return has(key) ? count(key) : fallback;
}

std::vector<double> RunConfig::numbers(const std::string& key, std::size_t expected) const {
    auto out = parse_numbers(text(key), "config key '" + key + "'");
    if (expected != 0 && out.size() != expected) {
        throw ConfigError("config key '" + key + "': expected " + std::to_string(expected) + " numbers, got " +
                          std::to_string(out.size()));
    }
    return out;
}

std::filesystem::path RunConfig::resolve(const std::string& file) const {
    std::filesystem::path p(file);
    if (p.is_relative() && !base_dir_.empty()) p = base_dir_ / p;
    if (!std::filesystem::exists(p)) throw ConfigError("referenced file '" + p.string() + "' does not exist");
    return p;
}

}  // namespace covpovm::cli
