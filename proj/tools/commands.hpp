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

#include "handles.hpp"
#include "run_config.hpp"

#include <json.hpp>

#include <array>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

namespace nashseek::cli
{

enum ExitCode : int
{
    kExitOk = 0,
    kExitUsage = 1,
    kExitDiverged = 2,
    kExitChecksFailed = 3,
};

GameHandle build_game(const GameSpec& spec, std::size_t players);
GraphHandle build_graph(const GraphSpec& spec);

/// Writes the trajectory CSV, summary JSON and plot script into
/// cfg.output.dir; progress goes to `log`, problems to `err`.
int cmd_run(const RunConfig& cfg, std::ostream& log, std::ostream& err);

/// Runs every *.json config in `dir` (sorted by name) on up to `jobs`
/// threads. `apply` patches each resolved config with command-line
/// overrides; each run then writes into <output dir>/<file stem>.
int cmd_batch(
    const std::string& dir,
    std::size_t jobs,
    const std::function<void(RunConfig&)>& apply,
    std::ostream& log,
    std::ostream& err);

struct CheckOptions
{
    std::optional<Vector> at;
    std::optional<std::string> from_run;  // summary.json of an earlier run
    bool json = false;
};

int cmd_check(const RunConfig& cfg, const CheckOptions& opts, std::ostream& out, std::ostream& err);

int cmd_nash(const RunConfig& cfg, bool json, std::ostream& out, std::ostream& err);

int cmd_rate(
    const std::string& csv_path,
    std::array<double, 2> window,
    bool json,
    std::ostream& out,
    std::ostream& err);

/// Python/matplotlib script plotting x_i(t) from the trajectory CSV.
std::string plot_script(const std::string& csv_name, std::size_t players, const std::optional<Vector>& x_star);

}  // namespace nashseek::cli
