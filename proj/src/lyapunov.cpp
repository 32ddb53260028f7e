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

#include <Eigen/Cholesky>
#include <Eigen/LU>

#include <cmath>

namespace nashseek
{
namespace
{

// Position of P(a, b), a <= b, in the packed upper triangle.
Eigen::Index packed(Eigen::Index k, Eigen::Index a, Eigen::Index b)
{
    if (a > b)
    {
        std::swap(a, b);
    }
    return a * k - a * (a - 1) / 2 + (b - a);
}

Eigen::VectorXd stacked_estimate_error(const SeekerState& s)
{
    const auto n = s.x.size();
    Eigen::VectorXd ybar(n * n);
    for (Eigen::Index i = 0; i < n; ++i)
    {
        for (Eigen::Index j = 0; j < n; ++j)
        {
            ybar(i * n + j) = s.Y(i, j) - s.x(j);
        }
    }
    return ybar;
}

}  // namespace

Eigen::MatrixXd solve_lyapunov(const Eigen::MatrixXd& M, const Eigen::MatrixXd& Q)
{
    const Eigen::Index k = M.rows();
    if (M.cols() != k || Q.rows() != k || Q.cols() != k)
    {
        throw Error(ErrorCode::DimensionMismatch, "M and Q must be square of equal size");
    }
    if (k == 0)
    {
        throw Error(ErrorCode::InvalidArgument, "empty matrix");
    }
    if ((Q - Q.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, Q.cwiseAbs().maxCoeff()))
    {
        throw Error(ErrorCode::InvalidArgument, "Q must be symmetric");
    }
    if (Q.llt().info() != Eigen::Success)
    {
        throw Error(ErrorCode::InvalidArgument, "Q must be positive definite");
    }
    if (!is_hurwitz(-M))
    {
        throw Error(
            ErrorCode::NotHurwitz,
            "-M is not Hurwitz (max real eigenvalue of -M = "
                + std::to_string(max_real_eigenvalue(-M)) + ")");
    }

    // Row (i, j), i <= j, of the packed system is entry (i, j) of
    //   sum_l P(i, l) M(l, j) + sum_l M(l, i) P(l, j).
    const Eigen::Index unknowns = k * (k + 1) / 2;
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(unknowns, unknowns);
    Eigen::VectorXd rhs(unknowns);
    for (Eigen::Index i = 0; i < k; ++i)
    {
        for (Eigen::Index j = i; j < k; ++j)
        {
            const Eigen::Index row = packed(k, i, j);
            for (Eigen::Index l = 0; l < k; ++l)
            {
                A(row, packed(k, i, l)) += M(l, j);
                A(row, packed(k, l, j)) += M(l, i);
            }
            rhs(row) = Q(i, j);
        }
    }
    const Eigen::VectorXd p = A.partialPivLu().solve(rhs);

    Eigen::MatrixXd P(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
    {
        for (Eigen::Index j = i; j < k; ++j)
        {
            P(i, j) = P(j, i) = p(packed(k, i, j));
        }
    }
    return P;
}

double LyapunovMonitor::value(const SeekerState& s, const Eigen::VectorXd& x_star) const
{
    const auto n = x_star.size();
    if (s.x.size() != n || kbar_inv.size() != n || P1.rows() != n * n)
    {
        throw Error(ErrorCode::DimensionMismatch, "state does not match the monitor");
    }
    const Eigen::VectorXd e = s.x - x_star;
    const Eigen::VectorXd ybar = stacked_estimate_error(s);
    return 0.5 * c * e.dot(kbar_inv.cwiseProduct(e)) + (1.0 - c) * ybar.dot(P1 * ybar);
}

LyapunovMonitor make_lyapunov_monitor(
    const CommGraph& graph,
    const SeekerParams& params,
    double c,
    const std::optional<Eigen::MatrixXd>& Q1)
{
    if (!(c > 0.0 && c < 1.0))
    {
        throw Error(ErrorCode::InvalidArgument, "mixing constant c must lie in (0, 1)");
    }
    const std::size_t n = graph.size();
    params.validate(n);
    const auto nn = static_cast<Eigen::Index>(n * n);

    const Eigen::MatrixXd gains = params.gains_or_ones(n);
    const auto ni = static_cast<Eigen::Index>(n);
    Eigen::VectorXd gain_diag(nn);
    for (Eigen::Index i = 0; i < ni; ++i)
    {
        for (Eigen::Index j = 0; j < ni; ++j)
        {
            gain_diag(i * ni + j) = gains(i, j);
        }
    }
    const Eigen::MatrixXd M = gain_diag.asDiagonal() * estimation_matrix(graph);

    LyapunovMonitor mon;
    mon.c = c;
    mon.Q1 = Q1 ? *Q1 : Eigen::MatrixXd::Identity(nn, nn);
    mon.P1 = solve_lyapunov(M, mon.Q1);
    mon.kbar_inv = params.kbar_or_ones(n).cwiseInverse();
    return mon;
}

LyapunovSeries lyapunov_along_trajectory(
    const LyapunovMonitor& mon,
    const Trajectory& traj,
    const Eigen::VectorXd& x_star,
    double burn_in_fraction)
{
    const std::size_t count = traj.times.size();
    if (traj.states.size() != count)
    {
        throw Error(ErrorCode::DimensionMismatch, "trajectory times and states differ in length");
    }
    if (static_cast<std::size_t>(x_star.size()) != traj.dimension())
    {
        throw Error(ErrorCode::DimensionMismatch, "x_star does not match the trajectory");
    }
    if (count < 2)
    {
        throw Error(ErrorCode::EmptyWindow, "need at least 2 samples");
    }
    if (!(burn_in_fraction >= 0.0 && burn_in_fraction < 1.0))
    {
        throw Error(ErrorCode::InvalidArgument, "burn-in fraction must lie in [0, 1)");
    }
    const double stride = traj.times[1] - traj.times[0];
    for (std::size_t k = 1; k < count; ++k)
    {
        const double dt = traj.times[k] - traj.times[k - 1];
        if (!(dt > 0.0) || std::abs(dt - stride) > 1e-9 * std::max(1.0, stride))
        {
            throw Error(ErrorCode::InvalidArgument, "trajectory must be sampled uniformly");
        }
    }

    LyapunovSeries out;
    out.times = traj.times;
    out.V.reserve(count);
    for (const auto& s : traj.states)
    {
        out.V.push_back(mon.value(s, x_star));
    }
    out.V_dot.resize(count);
    out.V_dot[0] = (out.V[1] - out.V[0]) / (out.times[1] - out.times[0]);
    out.V_dot[count - 1] =
        (out.V[count - 1] - out.V[count - 2]) / (out.times[count - 1] - out.times[count - 2]);
    for (std::size_t k = 1; k + 1 < count; ++k)
    {
        out.V_dot[k] = (out.V[k + 1] - out.V[k - 1]) / (out.times[k + 1] - out.times[k - 1]);
    }

    const double t0 = out.times.front();
    const double cutoff = t0 + burn_in_fraction * (out.times.back() - t0);
    std::size_t start = 0;
    while (start < count && out.times[start] < cutoff)
    {
        ++start;
    }
    out.burn_in_index = start;
    std::size_t decreasing = 0;
    for (std::size_t k = start; k < count; ++k)
    {
        if (out.V_dot[k] < 0.0)
        {
            ++decreasing;
        }
    }
    out.decrease_fraction =
        start < count ? static_cast<double>(decreasing) / static_cast<double>(count - start) : 0.0;
    return out;
}

}  // namespace nashseek
