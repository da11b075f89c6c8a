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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <fmt/format.h>
#include <json.hpp>

#include "covpovm/affine.hpp"
#include "covpovm/density.hpp"
#include "covpovm/errors.hpp"
#include "covpovm/fock_space.hpp"
#include "covpovm/heisenberg_povm.hpp"
#include "covpovm/phase_space.hpp"
#include "covpovm/povm_core.hpp"

namespace covpovm::cli {

namespace {

std::string number_text(double x) {
    if (!std::isfinite(x)) return "null";
    return fmt::format("{:.17g}", x);
}

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    out += fmt::format("\\u{:04x}", static_cast<int>(c));
                } else {
                    out += c;
                }
        }
    }
    return out + "\"";
}

struct Check {
    std::string name;
    double value;
    double tolerance;
    bool passed;
};

// Scalar results and pass/fail checks of one run, serialized in insertion order.
class Report {
  public:
    using Value = std::variant<double, std::string, bool>;

    void set(std::string key, Value value) { results_.emplace_back(std::move(key), std::move(value)); }

    /// value <= tolerance passes.
    void check_at_most(std::string name, double value, double tolerance) {
        checks_.push_back({std::move(name), value, tolerance, value <= tolerance});
    }
    void check_at_least(std::string name, double value, double tolerance) {
        checks_.push_back({std::move(name), value, tolerance, value >= tolerance});
    }

    [[nodiscard]] bool passed() const {
        return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
    }

    [[nodiscard]] std::string json(const std::string& command, const std::string& name) const {
        std::string out = "{\n  \"command\": " + quoted(command) + ",\n  \"name\": " + quoted(name) +
                          ",\n  \"results\": {";
        for (std::size_t i = 0; i < results_.size(); ++i) {
            out += (i ? ",\n    " : "\n    ") + quoted(results_[i].first) + ": " + value_text(results_[i].second);
        }
        out += results_.empty() ? "},\n" : "\n  },\n";
        out += "  \"checks\": [";
        for (std::size_t i = 0; i < checks_.size(); ++i) {
            const auto& c = checks_[i];
            out += (i ? ",\n    " : "\n    ");
            out += "{\"name\": " + quoted(c.name) + ", \"value\": " + number_text(c.value) +
                   ", \"tolerance\": " + number_text(c.tolerance) + ", \"passed\": " + (c.passed ? "true" : "false") +
                   "}";
        }
        out += checks_.empty() ? "],\n" : "\n  ],\n";
        out += std::string("  \"passed\": ") + (passed() ? "true" : "false") + "\n}\n";
        return out;
    }

  private:
    static std::string value_text(const Value& v) {
        if (const auto* d = std::get_if<double>(&v)) return number_text(*d);
        if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
        return quoted(std::get<std::string>(v));
    }

    std::vector<std::pair<std::string, Value>> results_;
    std::vector<Check> checks_;
};

std::string matrix_json(const std::string& name, const LinearOperator& m, const CheckReport& check) {
    std::string out = "{\n  \"name\": " + quoted(name) + ",\n  \"dim\": " + std::to_string(m.rows()) +
                      ",\n  \"entries\": [";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        out += i ? ",\n    [" : "\n    [";
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) out += ", ";
            out += "[" + number_text(m(i, j).real()) + ", " + number_text(m(i, j).imag()) + "]";
        }
        out += "]";
    }
    out += "\n  ],\n  \"check\": {\"hermiticity_defect\": " + number_text(check.hermiticity_defect) +
           ", \"min_eigenvalue\": " + number_text(check.min_eigenvalue) +
           ", \"trace_defect\": " + number_text(check.trace_defect) +
           ", \"passed\": " + (check.passed ? "true" : "false") + "}\n}\n";
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write output file '" + path.string() + "'");
    out << contents;
}

// Operator presets: vacuum, fock:n, mixed:w0,w1,..., file:path.
DensityOperator parse_operator(const RunConfig& config, const std::string& key, std::size_t dim) {
    const std::string spec = config.text(key, "vacuum");
    const FockSpace space(dim);
    if (spec == "vacuum") return vacuum_density(space);
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "fock") {
        const auto levels = parse_numbers(arg, key);
        if (levels.size() != 1 || levels[0] < 0 || levels[0] != std::floor(levels[0])) {
            throw ConfigError(key + ": fock:n needs one nonnegative integer level");
        }
        return fock_density(space, static_cast<std::size_t>(levels[0]));
    }
    if (kind == "mixed") {
        const auto weights = parse_numbers(arg, key);
        return diagonal_density(space, weights);
    }
    if (kind == "file") {
        const auto path = config.resolve(arg);
        std::ifstream in(path);
        nlohmann::json doc;
        try {
            in >> doc;
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError(key + ": cannot parse '" + path.string() + "': " + e.what());
        }
        const nlohmann::json& rows = doc.is_object() ? doc.at("entries") : doc;
        if (!rows.is_array()) throw ConfigError(key + ": entries must be an array of rows");
        const auto n = static_cast<Eigen::Index>(rows.size());
        LinearOperator m(n, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            const auto& row = rows[static_cast<std::size_t>(i)];
            if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
                throw ConfigError(key + ": operator in '" + path.string() + "' is not square");
            }
            for (Eigen::Index j = 0; j < n; ++j) {
                const auto& z = row[static_cast<std::size_t>(j)];
                if (z.is_number()) {
                    m(i, j) = z.get<double>();
                } else if (z.is_array() && z.size() == 2) {
                    m(i, j) = Complex(z[0].get<double>(), z[1].get<double>());
                } else {
                    throw ConfigError(key + ": entries must be numbers or [re, im] pairs");
                }
            }
        }
        if (static_cast<std::size_t>(n) != dim) {
            throw DimensionMismatch("dimension mismatch: " + key + " from '" + path.string() + "' has dimension " +
                                    std::to_string(n) + ", configured dim is " + std::to_string(dim));
        }
        return validate_density(m, config.number("density_tolerance", 1e-10));
    }
    throw ConfigError(key + ": unknown operator preset '" + spec + "'");
}

PhaseSpaceRegion parse_region(const std::string& spec) {
    PhaseSpaceRegion region;
    if (spec == "empty") return region;
    std::stringstream stream(spec);
    std::string item;
    while (std::getline(stream, item, ';')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw ConfigError("region: expected rect:... or disk:..., got '" + item + "'");
        std::string kind = item.substr(0, colon);
        kind.erase(std::remove_if(kind.begin(), kind.end(), ::isspace), kind.end());
        const auto args = parse_numbers(item.substr(colon + 1), "region");
        if (kind == "rect" && args.size() == 4) {
            region = region.unite(PhaseSpaceRegion::rect(args[0], args[1], args[2], args[3]));
        } else if (kind == "disk" && args.size() == 3) {
            region = region.unite(PhaseSpaceRegion::disk(args[0], args[1], args[2]));
        } else {
            throw ConfigError("region: bad primitive '" + item + "'");
        }
    }
    return region;
}

QuadratureSpec parse_quadrature(const RunConfig& config, const PhaseSpaceRegion& region, unsigned threads) {
    QuadratureSpec quad;
    const std::string rule = config.text("rule", "gauss-legendre");
    if (rule == "gauss-legendre") {
        quad.rule = QuadratureRule::gauss_legendre;
    } else if (rule == "trapezoid") {
        quad.rule = QuadratureRule::trapezoid;
    } else {
        throw ConfigError("rule: expected gauss-legendre or trapezoid, got '" + rule + "'");
    }
    const std::size_t nodes = config.count("nodes", 64);
    quad.nodes_p = config.count("nodes_p", nodes);
    quad.nodes_q = config.count("nodes_q", nodes);
    if (config.has("box")) {
        const auto b = config.numbers("box", 4);
        quad.box = Rect{b[0], b[1], b[2], b[3]};
    } else if (const auto bbox = region.bounding_box()) {
        quad.box = *bbox;
    } else {
        quad.box = Rect{0.0, 1.0, 0.0, 1.0};
    }
    quad.threads = threads;
    quad.validate();
    return quad;
}

std::uint64_t effective_seed(const RunConfig& config, const RunOptions& options) {
    if (options.seed) return *options.seed;
    if (!config.has("seed")) return 0;
    const std::string text = config.text("seed");
    try {
        std::size_t used = 0;
        const auto value = std::stoull(text, &used);
        if (used != text.size()) throw ConfigError("seed: not an unsigned integer");
        return value;
    } catch (const std::logic_error&) {
        throw ConfigError("seed: '" + text + "' is not an unsigned integer");
    }
}

// Outputs of one command, written by run() once the command returns.
struct Artifacts {
    Report report;
    std::optional<std::pair<LinearOperator, CheckReport>> matrix;
    std::optional<std::string> heatmap;
};

void husimi_grid(const RunConfig& config, Artifacts& out) {
    const std::size_t dim = config.count("dim");
    const HeisenbergPovm povm(parse_operator(config, "T", dim));
    const DensityOperator rho = parse_operator(config, "rho", dim);
    const std::vector<double> box = config.has("grid") ? config.numbers("grid", 4) : std::vector<double>{-4, 4, -4, 4};
    const std::size_t np = config.count("grid_p", 81);
    const std::size_t nq = config.count("grid_q", 81);
    if (np < 2 || nq < 2 || box[0] >= box[1] || box[2] >= box[3]) {
        throw ConfigError("husimi-grid: need an ordered grid box and at least 2 points per axis");
    }
    const double dp = (box[1] - box[0]) / static_cast<double>(np - 1);
    const double dq = (box[3] - box[2]) / static_cast<double>(nq - 1);

    std::string csv = "p,q,value\n";
    double sum = 0.0;
    double lowest = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < np; ++i) {
        const double p = i + 1 == np ? box[1] : box[0] + dp * static_cast<double>(i);
        for (std::size_t j = 0; j < nq; ++j) {
            const double q = j + 1 == nq ? box[3] : box[2] + dq * static_cast<double>(j);
            const double value = povm.density(rho, p, q);
            sum += value;
            lowest = std::min(lowest, value);
            csv += number_text(p) + "," + number_text(q) + "," + number_text(value) + "\n";
        }
    }
    const double center_p = (box[0] + box[1]) / 2.0;
    const double center_q = (box[2] + box[3]) / 2.0;
    out.report.set("center_value", povm.density(rho, center_p, center_q));
    out.report.set("cell_area", dp * dq);
    out.report.set("mass", sum * dp * dq);
    out.report.set("min_value", lowest);
    out.report.check_at_least("density_nonnegative", lowest, -1e-12);
    out.heatmap = std::move(csv);
}

void povm_element_command(const RunConfig& config, Artifacts& out, unsigned threads) {
    const std::size_t dim = config.count("dim");
    const DensityOperator seed = parse_operator(config, "T", dim);
    const PhaseSpaceRegion region = parse_region(config.text("region"));
    const QuadratureSpec quad = parse_quadrature(config, region, threads);
    const LinearOperator q = HeisenbergPovm(seed).element(region, quad);
    const double tol = config.number("tolerance", 1e-9);
    const CheckReport check = psd_hermiticity_report(q, tol);
    out.report.set("trace", q.trace().real());
    try {
        out.report.set("measure", phase_space_measure(region));
    } catch (const Error&) {
        out.report.set("measure", std::string("unavailable: overlapping primitives"));
    }
    out.report.set("hermiticity_defect", check.hermiticity_defect);
    out.report.set("min_eigenvalue", check.min_eigenvalue);
    out.report.check_at_most("hermiticity_defect", check.hermiticity_defect, 1e-12);
    out.report.check_at_least("min_eigenvalue", check.min_eigenvalue, -1e-10);
    out.matrix.emplace(q, check);
}

void probability_command(const RunConfig& config, Artifacts& out, unsigned threads) {
    const std::size_t dim = config.count("dim");
    const HeisenbergPovm povm(parse_operator(config, "T", dim));
    const DensityOperator rho = parse_operator(config, "rho", dim);
    const PhaseSpaceRegion region = parse_region(config.text("region"));
    const QuadratureSpec quad = parse_quadrature(config, region, threads);
    const double value = povm.probability(rho, region, quad);
    const double via_element = (rho.matrix() * povm.element(region, quad)).trace().real();
    out.report.set("probability", value);
    out.report.set("probability_via_element", via_element);
    out.report.check_at_least("probability_lower", value, -1e-9);
    out.report.check_at_most("probability_upper", value, 1.0 + 1e-9);
    out.report.check_at_most("path_agreement", std::abs(value - via_element), 1e-12);
}

void covariance_command(const RunConfig& config, Artifacts& out, unsigned threads) {
    const std::size_t dim = config.count("dim");
    const HeisenbergPovm povm(parse_operator(config, "T", dim));
    const PhaseSpaceRegion region = parse_region(config.text("region"));
    const QuadratureSpec quad = parse_quadrature(config, region, threads);
    const auto shift = config.has("shift") ? config.numbers("shift", 2) : std::vector<double>{0.0, 0.0};
    const double residual = povm.covariance_residual({shift[0], shift[1]}, region, quad);
    out.report.set("shift_p", shift[0]);
    out.report.set("shift_q", shift[1]);
    out.report.set("residual", residual);
    out.report.check_at_most("covariance_residual", residual, config.number("tolerance", 1e-5));
}

void normalization_command(const RunConfig& config, Artifacts& out, unsigned threads) {
    const std::size_t dim = config.count("dim");
    const DensityOperator seed = parse_operator(config, "T", dim);
    const double half_width = config.number("R", 8.0);
    const std::size_t low_block = config.count("low_block", 4);
    const auto square = PhaseSpaceRegion::rect(-half_width, half_width, -half_width, half_width);
    QuadratureSpec quad = parse_quadrature(config, square, threads);
    const double defect = normalization_defect(seed, half_width, low_block, quad);
    out.report.set("R", half_width);
    out.report.set("low_block", static_cast<double>(low_block));
    out.report.set("defect", defect);
    out.report.check_at_most("normalization_defect", defect, config.number("tolerance", 1e-3));
}

void injectivity_command(const RunConfig& config, Artifacts& out, std::uint64_t seed) {
    const std::size_t dim = config.count("dim", 8);
    const FockSpace space(dim);
    const std::size_t pairs = config.count("pairs", 100);
    const double min_distance = config.number("min_trace_distance", 0.1);
    const double half_width = config.number("points_half_width", 3.0);
    const std::size_t grid = config.count("points_per_axis", 21);
    const double threshold = config.number("tolerance", 1e-3);
    if (grid < 2) throw ConfigError("injectivity: points_per_axis must be at least 2");

    std::mt19937_64 rng(seed);
    std::vector<DensityOperator> probes;
    for (std::size_t n = 0; n < std::min<std::size_t>(4, dim); ++n) probes.push_back(fock_density(space, n));
    for (int k = 0; k < 4; ++k) probes.push_back(pure_density(random_pure_state(space, rng)));
    std::vector<PhasePoint> points;
    for (std::size_t i = 0; i < grid; ++i) {
        for (std::size_t j = 0; j < grid; ++j) {
            const double step = 2.0 * half_width / static_cast<double>(grid - 1);
            points.push_back({-half_width + step * i, -half_width + step * j});
        }
    }
    std::uniform_int_distribution<std::size_t> rank(1, dim);
    double worst = std::numeric_limits<double>::infinity();
    std::size_t separated = 0;
    for (std::size_t k = 0; k < pairs; ++k) {
        DensityOperator t1 = random_density(space, rank(rng), rng);
        DensityOperator t2 = random_density(space, rank(rng), rng);
        while (trace_distance(t1, t2) < min_distance) t2 = random_density(space, rank(rng), rng);
        const double d = povm_sup_distance(t1, t2, probes, points);
        worst = std::min(worst, d);
        if (d > threshold) ++separated;
    }
    out.report.set("pairs", static_cast<double>(pairs));
    out.report.set("separated_pairs", static_cast<double>(separated));
    out.report.set("min_sup_distance", worst);
    out.report.set("seed", std::to_string(seed));
    out.report.check_at_least("min_sup_distance", worst, threshold);
}

HalfLineGrid parse_grid(const RunConfig& config) {
    return {config.number("x_min", 1e-3), config.number("ratio", 1.02), config.count("M", 512)};
}

// bump-third: log bump on the middle third of the grid; bump:lo,hi on [lo, hi].
SampledFunction parse_function(const RunConfig& config, const std::string& key, const HalfLineGrid& grid,
                               const std::string& fallback) {
    const std::string spec = config.text(key, fallback);
    if (spec == "bump-third") return log_bump(grid, grid.node(grid.size() / 3), grid.node(2 * grid.size() / 3));
    if (spec.rfind("bump:", 0) == 0) {
        const auto bounds = parse_numbers(spec.substr(5), key);
        if (bounds.size() != 2) throw ConfigError(key + ": bump:lo,hi needs two numbers");
        return log_bump(grid, bounds[0], bounds[1]);
    }
    throw ConfigError(key + ": unknown function '" + spec + "'");
}

GroupRegion parse_window(const RunConfig& config, const SampledFunction& u, const GroupQuadrature& quad) {
    const std::string spec = config.text("window", "full");
    if (spec == "full") return full_window(u, quad);
    const auto w = parse_numbers(spec, "window");
    if (w.size() != 4) throw ConfigError("window: expected full or b_lo,b_hi,a_lo,a_hi");
    return {w[0], w[1], w[2], w[3]};
}

GroupQuadrature parse_group_quadrature(const RunConfig& config, const SampledFunction& u, unsigned threads) {
    GroupQuadrature quad = resolving_quadrature(u, threads);
    if (config.has("b_step")) quad.b_step = config.number("b_step");
    return quad;
}

void axb_orthogonality(const RunConfig& config, Artifacts& out, unsigned threads) {
    const HalfLineGrid grid = parse_grid(config);
    const SampledFunction u = parse_function(config, "u", grid, "bump-third");
    const SampledFunction v = parse_function(config, "v", grid, config.text("u", "bump-third"));
    const GroupQuadrature quad = parse_group_quadrature(config, u, threads);
    const GroupRegion window = parse_window(config, u, quad);
    const double integral = coefficient_integral(u, v, window, quad);
    const double target = u.norm_squared() * v.norm_squared();
    out.report.set("integral", integral);
    out.report.set("target", target);
    out.report.set("b_max", std::max(std::abs(window.b_lo), std::abs(window.b_hi)));
    out.report.set("b_step", quad.b_step);
    out.report.set("modulation_bound", modulation_bound(u));
    out.report.set("edge_mass_Cv", edge_mass(apply_C(v)));
    out.report.check_at_most("orthogonality_defect", std::abs(integral - target), config.number("tolerance", 2e-2));
}

void axb_povm(const RunConfig& config, Artifacts& out, unsigned threads) {
    const HalfLineGrid grid = parse_grid(config);
    const SampledFunction eta = parse_function(config, "eta", grid, "bump-third");
    const SampledFunction u = parse_function(config, "u", grid, "bump-third");
    const GroupQuadrature quad = parse_group_quadrature(config, u, threads);
    const GroupRegion window = parse_window(config, u, quad);
    const double value = povm_quadratic_form(SpectralDensity::rank_one(eta), window, u, quad);
    out.report.set("quadratic_form", value);
    out.report.set("norm_u_squared", u.norm_squared());
    out.report.set("edge_mass_C_eta", edge_mass(apply_C(eta)));
    out.report.check_at_least("positivity", value, -1e-10);
    out.report.check_at_most("bounded_by_norm", value - u.norm_squared(), config.number("tolerance", 2e-2));
    if (config.text("cross_check", "false") == "true") {
        const double via_wavelet = wavelet_quadratic_form(u, eta, window, quad);
        out.report.set("quadratic_form_via_wavelet", via_wavelet);
        out.report.check_at_most("wavelet_agreement", std::abs(value - via_wavelet), 1e-10);
    }
}

}  // namespace

int run(const RunConfig& config, const RunOptions& options, std::ostream& log) {
    Artifacts out;
    try {
        const unsigned threads = std::max(1u, options.threads);
        switch (config.command()) {
            case Command::husimi_grid: husimi_grid(config, out); break;
            case Command::povm_element: povm_element_command(config, out, threads); break;
            case Command::probability: probability_command(config, out, threads); break;
            case Command::covariance_check: covariance_command(config, out, threads); break;
            case Command::normalization: normalization_command(config, out, threads); break;
            case Command::axb_orthogonality: axb_orthogonality(config, out, threads); break;
            case Command::axb_povm: axb_povm(config, out, threads); break;
            case Command::injectivity: injectivity_command(config, out, effective_seed(config, options)); break;
        }
    } catch (const ConfigError& e) {
        log << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const Error& e) {
        log << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const NumericalCheckFailure& e) {
        log << "numerical check failed: " << e.what() << "\n";
        return kExitCheckFailed;
    }

    const std::string name = config.name();
    try {
        std::filesystem::create_directories(options.out_dir);
        if (out.matrix && out.report.passed()) {
            write_file(options.out_dir / (name + ".matrix.json"), matrix_json(name, out.matrix->first, out.matrix->second));
        }
        if (out.heatmap && out.report.passed()) write_file(options.out_dir / (name + ".heatmap.csv"), *out.heatmap);
        write_file(options.out_dir / (name + ".report.json"), out.report.json(command_name(config.command()), name));
    } catch (const std::exception& e) {
        log << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    if (!out.report.passed()) {
        log << "check failed; see " << (options.out_dir / (name + ".report.json")).string() << "\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}

int run_file(const std::filesystem::path& config_path, const RunOptions& options, std::ostream& log) {
    try {
        return run(RunConfig::load(config_path), options, log);
    } catch (const ConfigError& e) {
        log << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}

}  // namespace covpovm::cli
