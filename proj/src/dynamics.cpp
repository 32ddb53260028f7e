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

#include "nashseek/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <sstream>
#include <utility>

namespace nashseek
{
namespace
{

void require(bool ok, const std::string& msg)
{
    if (!ok)
    {
        throw Error(ErrorCode::InvalidArgument, msg);
    }
}

double max_abs(const SeekerState& s)
{
    return std::max(s.x.cwiseAbs().maxCoeff(), s.Y.cwiseAbs().maxCoeff());
}

std::string describe(const SeekerState& s)
{
    std::ostringstream os;
    os.precision(6);
    os << "x = [";
    for (Eigen::Index i = 0; i < s.x.size(); ++i)
    {
        os << (i ? ", " : "") << s.x(i);
    }
    os << "]";
    return os.str();
}

}  // namespace

void SeekerParams::validate(std::size_t n) const
{
    const auto ni = static_cast<Eigen::Index>(n);
    require(std::isfinite(delta) && delta > 0.0, "delta must be > 0");
    require(std::isfinite(dt) && dt > 0.0, "dt must be > 0");
    require(std::isfinite(t_end) && t_end >= dt, "t_end must be >= dt");
    require(record_every >= 1, "record_every must be >= 1");
    if (kbar.size() != 0)
    {
        require(kbar.size() == ni, "kbar must have one entry per player");
        require((kbar.array() > 0.0).all() && kbar.allFinite(), "kbar entries must be > 0");
    }
    if (gains.size() != 0)
    {
        require(
            gains.rows() == ni && gains.cols() == ni,
            "gains must be an n x n matrix");
        require(
            (gains.array() > 0.0).all() && gains.allFinite(),
            "gains entries must be > 0");
    }
}

Eigen::VectorXd SeekerParams::kbar_or_ones(std::size_t n) const
{
    return kbar.size() == 0 ? Eigen::VectorXd::Ones(static_cast<Eigen::Index>(n))
                            : kbar;
}

Eigen::MatrixXd SeekerParams::gains_or_ones(std::size_t n) const
{
    const auto ni = static_cast<Eigen::Index>(n);
    return gains.size() == 0 ? Eigen::MatrixXd::Ones(ni, ni) : gains;
}

SeekerState SeekerState::consensus(const Eigen::VectorXd& x)
{
    SeekerState s;
    s.x = x;
    s.Y = x.transpose().replicate(x.size(), 1);
    return s;
}

DivergedError::DivergedError(const std::string& what, double time, SeekerState state)
    : Error(ErrorCode::Diverged, what), time_(time), state_(std::move(state))
{
}

StateDerivative rhs(
    const Game& game,
    const CommGraph& graph,
    const SeekerParams& params,
    const SeekerState& state)
{
    const std::size_t n = game.size();
    const auto ni = static_cast<Eigen::Index>(n);
    if (graph.size() != n || state.x.size() != ni || state.Y.rows() != ni
        || state.Y.cols() != ni)
    {
        throw Error(
            ErrorCode::DimensionMismatch,
            "game, graph and state dimensions disagree");
    }

    const Eigen::MatrixXd& adj = graph.adjacency();
    const bool unit_gains = params.gains.size() == 0;
    const bool unit_kbar = params.kbar.size() == 0;

    StateDerivative d{Eigen::VectorXd(ni), EstimateMatrix(ni, ni)};
    for (Eigen::Index i = 0; i < ni; ++i)
    {
        const std::span<const double> yi(
            state.Y.data() + i * ni, static_cast<std::size_t>(ni));
        const double g = game.grad(static_cast<std::size_t>(i), yi);
        if (!std::isfinite(g))
        {
            throw DivergedError(
                "non-finite gradient for player " + std::to_string(i + 1)
                    + " at " + describe(state),
                0.0,
                state);
        }
        d.dx(i) = params.delta * (unit_kbar ? 1.0 : params.kbar(i)) * g;

        for (Eigen::Index j = 0; j < ni; ++j)
        {
            const double yij = state.Y(i, j);
            double bracket = 0.0;
            for (Eigen::Index k = 0; k < ni; ++k)
            {
                if (adj(i, k) != 0.0)
                {
                    bracket += adj(i, k) * (yij - state.Y(k, j));
                }
            }
            if (adj(i, j) != 0.0)
            {
                bracket += adj(i, j) * (yij - state.x(j));
            }
            d.dY(i, j) = -(unit_gains ? 1.0 : params.gains(i, j)) * bracket;
        }
    }
    return d;
}

double consensus_residual(const SeekerState& state)
{
    const auto n = state.x.size();
    double worst = 0.0;
    for (Eigen::Index i = 0; i < state.Y.rows(); ++i)
    {
        for (Eigen::Index j = 0; j < n; ++j)
        {
            worst = std::max(worst, std::abs(state.Y(i, j) - state.x(j)));
        }
    }
    return worst;
}

Trajectory integrate(
    const Game& game,
    const CommGraph& graph,
    const SeekerParams& params,
    const Eigen::VectorXd& x0,
    const std::optional<EstimateMatrix>& Y0,
    const std::optional<Eigen::VectorXd>& x_star)
{
    const std::size_t n = game.size();
    const auto ni = static_cast<Eigen::Index>(n);
    params.validate(n);
    if (graph.size() != n)
    {
        throw Error(
            ErrorCode::DimensionMismatch,
            "graph has " + std::to_string(graph.size()) + " nodes but the game has "
                + std::to_string(n) + " players");
    }
    if (x0.size() != ni)
    {
        throw Error(ErrorCode::DimensionMismatch, "x0 must have one entry per player");
    }
    if (Y0 && (Y0->rows() != ni || Y0->cols() != ni))
    {
        throw Error(ErrorCode::DimensionMismatch, "Y0 must be n x n");
    }
    if (x_star && x_star->size() != ni)
    {
        throw Error(ErrorCode::DimensionMismatch, "x_star must have one entry per player");
    }

    Trajectory traj;
    traj.x_star = x_star;
    traj.graph_connected = is_connected(graph);
    if (!traj.graph_connected)
    {
        traj.warnings.emplace_back(
            "communication graph is disconnected; estimates cannot reach "
            "consensus");
    }

    SeekerState s = SeekerState::consensus(x0);
    if (Y0)
    {
        s.Y = *Y0;
    }
    if (!s.is_finite())
    {
        throw Error(ErrorCode::InvalidArgument, "initial state must be finite");
    }

    const auto steps = static_cast<long long>(std::llround(params.t_end / params.dt));
    const double dt = params.dt;
    const auto stride = static_cast<long long>(params.record_every);
    traj.times.reserve(static_cast<std::size_t>(steps / stride + 1));

    auto record = [&](double t) {
        traj.times.push_back(t);
        traj.states.push_back(s);
        traj.consensus_residual.push_back(consensus_residual(s));
        if (x_star)
        {
            traj.action_error.push_back((s.x - *x_star).norm());
        }
    };

    auto eval = [&](const SeekerState& at, double t) {
        try
        {
            return rhs(game, graph, params, at);
        }
        catch (const DivergedError& e)
        {
            throw DivergedError(e.what(), t, e.state());
        }
    };

    record(0.0);
    SeekerState stage{Eigen::VectorXd(ni), EstimateMatrix(ni, ni)};
    for (long long k = 1; k <= steps; ++k)
    {
        const double t0 = static_cast<double>(k - 1) * dt;
        const StateDerivative k1 = eval(s, t0);
        stage.x = s.x + 0.5 * dt * k1.dx;
        stage.Y = s.Y + 0.5 * dt * k1.dY;
        const StateDerivative k2 = eval(stage, t0 + 0.5 * dt);
        stage.x = s.x + 0.5 * dt * k2.dx;
        stage.Y = s.Y + 0.5 * dt * k2.dY;
        const StateDerivative k3 = eval(stage, t0 + 0.5 * dt);
        stage.x = s.x + dt * k3.dx;
        stage.Y = s.Y + dt * k3.dY;
        const StateDerivative k4 = eval(stage, t0 + dt);

        s.x += (dt / 6.0) * (k1.dx + 2.0 * k2.dx + 2.0 * k3.dx + k4.dx);
        s.Y += (dt / 6.0) * (k1.dY + 2.0 * k2.dY + 2.0 * k3.dY + k4.dY);

        const double t = static_cast<double>(k) * dt;
        if (!s.is_finite() || max_abs(s) > kDivergenceThreshold)
        {
            throw DivergedError(
                "state diverged at t = " + std::to_string(t) + " (" + describe(s)
                    + "); delta is likely too large for this game",
                t,
                s);
        }
        if (k % stride == 0)
        {
            record(t);
        }
    }
    traj.final_state = s;
    return traj;
}

}  // namespace nashseek
