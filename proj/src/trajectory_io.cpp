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

#include "nashseek/trajectory_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace nashseek
{
namespace
{

void put(std::ostream& os, double v)
{
    if (std::isnan(v))
    {
        os << "nan";
        return;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    os << buf;
}

std::vector<std::string> split_row(const std::string& line)
{
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ','))
    {
        const auto b = cell.find_first_not_of(" \t\r");
        const auto e = cell.find_last_not_of(" \t\r");
        cells.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    return cells;
}

}  // namespace

void write_trajectory_csv(std::ostream& os, const Trajectory& traj, bool include_estimates)
{
    const std::size_t n = traj.dimension();
    os << "t";
    for (std::size_t i = 1; i <= n; ++i)
    {
        os << ",x_" << i;
    }
    os << ",err,consensus_residual";
    if (include_estimates)
    {
        for (std::size_t i = 1; i <= n; ++i)
        {
            for (std::size_t j = 1; j <= n; ++j)
            {
                os << ",y_" << i << '_' << j;
            }
        }
    }
    os << '\n';

    for (std::size_t k = 0; k < traj.sample_count(); ++k)
    {
        const SeekerState& s = traj.states[k];
        put(os, traj.times[k]);
        for (Eigen::Index i = 0; i < s.x.size(); ++i)
        {
            os << ',';
            put(os, s.x(i));
        }
        os << ',';
        put(os, traj.action_error.empty() ? std::nan("") : traj.action_error[k]);
        os << ',';
        put(os, traj.consensus_residual[k]);
        if (include_estimates)
        {
            for (Eigen::Index i = 0; i < s.Y.rows(); ++i)
            {
                for (Eigen::Index j = 0; j < s.Y.cols(); ++j)
                {
                    os << ',';
                    put(os, s.Y(i, j));
                }
            }
        }
        os << '\n';
    }
}

void write_trajectory_csv(const std::string& path, const Trajectory& traj, bool include_estimates)
{
    std::ofstream os(path, std::ios::binary);
    if (!os)
    {
        throw Error(ErrorCode::Io, "cannot open '" + path + "' for writing");
    }
    write_trajectory_csv(os, traj, include_estimates);
    if (!os)
    {
        throw Error(ErrorCode::Io, "failed writing '" + path + "'");
    }
}

ErrorSeries read_error_series(std::istream& is)
{
    std::string line;
    if (!std::getline(is, line))
    {
        throw Error(ErrorCode::Io, "trajectory CSV is empty");
    }
    const auto header = split_row(line);
    std::size_t t_col = header.size();
    std::size_t err_col = header.size();
    for (std::size_t c = 0; c < header.size(); ++c)
    {
        if (header[c] == "t")
        {
            t_col = c;
        }
        else if (header[c] == "err")
        {
            err_col = c;
        }
    }
    if (t_col == header.size() || err_col == header.size())
    {
        throw Error(ErrorCode::Io, "trajectory CSV needs 't' and 'err' columns");
    }

    ErrorSeries series;
    std::size_t line_no = 1;
    while (std::getline(is, line))
    {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
        {
            continue;
        }
        const auto cells = split_row(line);
        if (cells.size() != header.size())
        {
            throw Error(
                ErrorCode::Io,
                "line " + std::to_string(line_no) + ": expected "
                    + std::to_string(header.size()) + " columns");
        }
        auto parse = [&](const std::string& cell) {
            char* end = nullptr;
            const double v = std::strtod(cell.c_str(), &end);
            if (cell.empty() || end != cell.c_str() + cell.size())
            {
                throw Error(
                    ErrorCode::Io,
                    "line " + std::to_string(line_no) + ": bad number '" + cell + "'");
            }
            return v;
        };
        const double t = parse(cells[t_col]);
        const double e = parse(cells[err_col]);
        if (std::isnan(e))
        {
            throw Error(
                ErrorCode::Io,
                "err column is nan; the run had no known equilibrium");
        }
        series.times.push_back(t);
        series.errors.push_back(e);
    }
    return series;
}

ErrorSeries read_error_series(const std::string& path)
{
    std::ifstream is(path);
    if (!is)
    {
        throw Error(ErrorCode::Io, "cannot open '" + path + "'");
    }
    return read_error_series(is);
}

}  // namespace nashseek
