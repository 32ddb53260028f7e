/*
 * Copyright 2026 The nashseek Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <json.hpp>

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nashseek::cli
{

/// Configuration problem; the message names the offending field.
class ConfigError : public std::runtime_error
{
   public:
    using std::runtime_error::runtime_error;
};

using Vector = std::vector<double>;
using Matrix = std::vector<std::vector<double>>;

struct QuadraticSpec
{
    std::vector<Matrix> h;  // one n x n matrix per player
    Matrix v;               // row i: player i's linear coefficients
    Vector g;
};

struct GameSpec
{
    /// "example1", "example2", "example3" or "quadratic".
    std::string name = "example3";
    // example2 overrides
    std::optional<Vector> m;
    std::optional<Vector> d;
    // example3 overrides
    std::optional<Vector> rho;
    std::optional<double> p0;
    std::optional<double> q0;
    std::optional<Vector> x_desired;
    // name == "quadratic"
    std::optional<QuadraticSpec> quadratic;
};

struct GraphSpec
{
    /// "cycle", "path", "complete", "star" or "edges".
    std::string preset = "cycle";
    std::size_t n = 5;
    /// 1-based pairs, used when preset == "edges".
    std::vector<std::array<std::size_t, 2>> edges;
};

struct SeekerSpec
{
    double delta = 0.05;
    Vector kbar;  // empty = ones
    Matrix gains; // empty = ones
    double dt = 1e-3;
    double t_end = 100.0;
    std::size_t record_every = 10;
};

struct OutputSpec
{
    std::string dir;
    std::string trajectory = "trajectory.csv";
    std::string summary = "summary.json";
    std::string plot = "plot.py";
    bool include_estimates = false;
};

struct AnalysisSpec
{
    bool assumptions = false;
    bool lyapunov = true;
    bool rate_fit = true;
    bool monotonicity = false;
    double tol = 1e-6;
    double fd_step = 1e-4;
    double lyapunov_c = 0.5;
    double burn_in = 0.05;
    std::array<double, 2> rate_window{0.2, 0.8};
    double box_lo = -10.0;
    double box_hi = 10.0;
    std::size_t samples = 1000;
    std::uint64_t seed = 1;
};

struct RunConfig
{
    GameSpec game;
    GraphSpec graph;
    SeekerSpec seeker;
    Vector x0;
    std::optional<Matrix> y0;
    std::optional<Vector> x_star;
    OutputSpec output;
    AnalysisSpec analysis;

    /// Player count implied by the game.
    std::size_t players() const;

    /// Throws ConfigError naming the first inconsistent field.
    void validate() const;
};

nlohmann::json to_json(const RunConfig& cfg);

/// Parses a complete or partial document on top of `base`. Unknown keys and
/// wrongly typed values raise ConfigError with a dotted field path.
RunConfig from_json(const nlohmann::json& doc, const RunConfig& base);

/// Built-in defaults for a game: the tuning and initial conditions that
/// reproduce its reference run.
RunConfig defaults_for_game(const std::string& game_name);

/// Loads a config file (JSON). Throws ConfigError on I/O or parse errors.
nlohmann::json load_config_file(const std::string& path);

/// Resolves defaults < file < explicit game name. `game_override` is the
/// --game flag when given. The output directory falls back to
/// $NASHSEEK_OUTPUT_DIR, then "nashseek-out".
RunConfig resolve_config(
    const std::optional<nlohmann::json>& file_doc,
    const std::optional<std::string>& game_override);

/// "cycle:5", "path:4", "edges:4:1-2,2-3,3-4".
GraphSpec parse_graph_flag(const std::string& text);

/// Comma-separated list of doubles.
Vector parse_vector_flag(const std::string& text, const std::string& field);

inline constexpr const char* kOutputDirEnv = "NASHSEEK_OUTPUT_DIR";

}  // namespace nashseek::cli
