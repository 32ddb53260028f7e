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

#include "nashseek/analysis.hpp"

#include "nashseek/error.hpp"

#include <cmath>
#include <vector>

namespace nashseek
{

RateFit fit_exponential_rate(std::span<const double> times, std::span<const double> errors)
{
    if (times.size() != errors.size())
    {
        throw Error(ErrorCode::DimensionMismatch, "times and errors differ in length");
    }
    const std::size_t count = times.size();
    if (count < 2)
    {
        throw Error(ErrorCode::EmptyWindow, "rate fit needs at least 2 points");
    }
    for (std::size_t k = 0; k < count; ++k)
    {
        if (!(errors[k] > 0.0))
        {
            throw Error(
                ErrorCode::NonpositiveError,
                "error is not positive at t = " + std::to_string(times[k])
                    + "; fit on a window that ends before it");
        }
    }

    // Logs are taken relative to the first sample so a constant series is
    // exactly zero; centered sums keep the normal equations well conditioned.
    std::vector<double> y(count);
    const double y0 = std::log(errors[0]);
    double t_mean = 0.0;
    double y_mean = 0.0;
    for (std::size_t k = 0; k < count; ++k)
    {
        y[k] = std::log(errors[k]) - y0;
        t_mean += times[k];
        y_mean += y[k];
    }
    t_mean /= static_cast<double>(count);
    y_mean /= static_cast<double>(count);

    double stt = 0.0;
    double sty = 0.0;
    double syy = 0.0;
    for (std::size_t k = 0; k < count; ++k)
    {
        const double dt = times[k] - t_mean;
        const double dy = y[k] - y_mean;
        stt += dt * dt;
        sty += dt * dy;
        syy += dy * dy;
    }
    if (!(stt > 0.0))
    {
        throw Error(ErrorCode::EmptyWindow, "rate fit needs at least 2 distinct times");
    }

    RateFit fit;
    fit.points = count;
    const double slope = sty / stt;
    fit.rate = -slope;
    fit.intercept = y0 + y_mean - slope * t_mean;
    double ss_res = 0.0;
    for (std::size_t k = 0; k < count; ++k)
    {
        const double r = y[k] - y_mean - slope * (times[k] - t_mean);
        ss_res += r * r;
    }
    // A constant series is fitted exactly by a flat line.
    fit.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
    return fit;
}

RateFit fit_exponential_rate_window(
    std::span<const double> times,
    std::span<const double> errors,
    double lo_fraction,
    double hi_fraction)
{
    if (times.size() != errors.size())
    {
        throw Error(ErrorCode::DimensionMismatch, "times and errors differ in length");
    }
    if (!(lo_fraction >= 0.0 && lo_fraction < hi_fraction && hi_fraction <= 1.0))
    {
        throw Error(ErrorCode::InvalidArgument, "window must satisfy 0 <= lo < hi <= 1");
    }
    if (times.empty())
    {
        throw Error(ErrorCode::EmptyWindow, "no samples");
    }
    const double t0 = times.front();
    const double span = times.back() - t0;
    const double lo = t0 + lo_fraction * span;
    const double hi = t0 + hi_fraction * span;
    std::vector<double> t;
    std::vector<double> e;
    for (std::size_t k = 0; k < times.size(); ++k)
    {
        if (times[k] >= lo && times[k] <= hi)
        {
            t.push_back(times[k]);
            e.push_back(errors[k]);
        }
    }
    return fit_exponential_rate(t, e);
}

}  // namespace nashseek
