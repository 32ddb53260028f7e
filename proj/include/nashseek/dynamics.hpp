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

#include "nashseek/error.hpp"
#include "nashseek/games.hpp"
#include "nashseek/graph.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace nashseek
{

/// Row i holds player i's estimates of every action, Y(i, j) = y_ij.
/// Row-major so each row is a contiguous point for Game::grad.
using EstimateMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Tuning of the seeking strategy. Action gains are k_i = delta * kbar_i.
/// Empty kbar / gains stand for all ones.
struct SeekerParams
{
    double delta = 0.05;
    Eigen::VectorXd kbar;
    Eigen::MatrixXd gains;
    double dt = 1e-3;
    double t_end = 100.0;
    std::size_t record_every = 10;

    /// Throws Error(InvalidArgument) naming the offending field.
    void validate(std::size_t n) const;

    Eigen::VectorXd kbar_or_ones(std::size_t n) const;
    Eigen::MatrixXd gains_or_ones(std::size_t n) const;
};

struct SeekerState
{
    Eigen::VectorXd x;
    EstimateMatrix Y;

    /// Every player's estimate equal to the true action profile.
    static SeekerState consensus(const Eigen::VectorXd& x);

    bool is_finite() const { return x.allFinite() && Y.allFinite(); }
};

struct StateDerivative
{
    Eigen::VectorXd dx;
    EstimateMatrix dY;
};

/// Raised when the state blows up or a gradient stops being finite, which
/// usually means delta lies outside the stable range for this game.
class DivergedError : public Error
{
   public:
    DivergedError(const std::string& what, double time, SeekerState state);

    double time() const noexcept { return time_; }
    const SeekerState& state() const noexcept { return state_; }

   private:
    double time_;
    SeekerState state_;
};

struct Trajectory
{
    std::vector<double> times;
    std::vector<SeekerState> states;
    /// ||x - x*||_2 per sample; empty when x* was not supplied.
    std::vector<double> action_error;
    /// max_ij |Y(i, j) - x_j| per sample.
    std::vector<double> consensus_residual;

    /// State at t_end (also recorded in states when the stride divides the
    /// step count).
    SeekerState final_state;
    std::optional<Eigen::VectorXd> x_star;
    bool graph_connected = true;
    std::vector<std::string> warnings;

    std::size_t dimension() const noexcept
    {
        return static_cast<std::size_t>(final_state.x.size());
    }
    std::size_t sample_count() const noexcept { return times.size(); }
};

/// Right-hand side of the coupled action / estimate dynamics:
///   dx_i  = delta kbar_i df_i/dx_i (y_i)
///   dy_ij = -m_ij (sum_k a_ik (y_ij - y_kj) + a_ij (y_ij - x_j))
StateDerivative rhs(
    const Game& game,
    const CommGraph& graph,
    const SeekerParams& params,
    const SeekerState& state);

/// Fixed-step classical Runge-Kutta integration over [0, t_end].
///
/// Y0 defaults to every row equal to x0. Samples are taken every
/// record_every steps starting at t = 0. Bit-for-bit deterministic for
/// identical inputs. A disconnected graph is allowed but reported through
/// graph_connected / warnings. Throws DivergedError once any state entry
/// exceeds 1e12 in magnitude or becomes non-finite.
Trajectory integrate(
    const Game& game,
    const CommGraph& graph,
    const SeekerParams& params,
    const Eigen::VectorXd& x0,
    const std::optional<EstimateMatrix>& Y0 = std::nullopt,
    const std::optional<Eigen::VectorXd>& x_star = std::nullopt);

double consensus_residual(const SeekerState& state);

inline constexpr double kDivergenceThreshold = 1e12;

}  // namespace nashseek
