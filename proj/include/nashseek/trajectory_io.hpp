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

#include "nashseek/dynamics.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace nashseek
{

// CSV layout, one row per recorded sample, values printed with 17
// significant digits:
//
//   t,x_1,...,x_n,err,consensus_residual[,y_11,y_12,...,y_nn]
//
// err is ||x - x*||_2, or "nan" when the run had no known x*. Estimates are
// written player-major (y_11, y_12, ..., y_1n, y_21, ...).

void write_trajectory_csv(std::ostream& os, const Trajectory& traj, bool include_estimates);

void write_trajectory_csv(const std::string& path, const Trajectory& traj, bool include_estimates);

struct ErrorSeries
{
    std::vector<double> times;
    std::vector<double> errors;
};

/// Reads the t and err columns back from a trajectory CSV.
ErrorSeries read_error_series(std::istream& is);
ErrorSeries read_error_series(const std::string& path);

}  // namespace nashseek
