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
#include "nashseek/games.hpp"
#include "nashseek/graph.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace nashseek
{

inline constexpr double kDefaultHessianStep = 1e-4;

// ---------------------------------------------------------------------------
// Local conditions at a candidate equilibrium
// ---------------------------------------------------------------------------

/// B(i, j) ~ d^2 f_i / dx_i dx_j at x, by central differences of grad(i, .).
Eigen::MatrixXd numeric_B(
    const Game& game,
    std::span<const double> x,
    double step = kDefaultHessianStep);

struct StationarityCheck
{
    bool stationary = false;
    bool own_concave = false;
};

/// stationary: ||pseudogradient(x)||_inf <= tol.
/// own_concave: every d^2 f_i / dx_i^2 (x) < -tol.
StationarityCheck check_assumption3(
    const Game& game,
    std::span<const double> x,
    double tol,
    double step = kDefaultHessianStep);

bool is_strictly_diag_dominant(const Eigen::MatrixXd& m);

double max_real_eigenvalue(const Eigen::MatrixXd& m);

/// max Re(lambda) < -margin.
bool is_hurwitz(const Eigen::MatrixXd& m, double margin = 0.0);

struct AssumptionReport
{
    Eigen::VectorXd point;
    bool stationary = false;
    double stationarity_residual = 0.0;
    bool own_hessian_negative = false;
    Eigen::VectorXd own_hessian;
    Eigen::MatrixXd B;
    bool B_diag_dominant = false;
    bool B_hurwitz = false;
    double B_max_real_eig = 0.0;

    /// Stationary, own-concave and B strictly diagonally dominant: the local
    /// convergence conditions.
    bool passed() const
    {
        return stationary && own_hessian_negative && B_diag_dominant;
    }
};

AssumptionReport assess_candidate(
    const Game& game,
    std::span<const double> x,
    double tol,
    double step = kDefaultHessianStep);

// ---------------------------------------------------------------------------
// Strong monotonicity of the pseudogradient (sampled)
// ---------------------------------------------------------------------------

struct Box
{
    Eigen::VectorXd lo;
    Eigen::VectorXd hi;

    static Box cube(std::size_t n, double lo, double hi);
};

struct MonotonicityEstimate
{
    /// Largest m with (x - z)^T (G(x) - G(z)) <= -m ||x - z||^2 on every
    /// sampled pair.
    double m_hat = 0.0;
    bool violated = true;
    Eigen::VectorXd worst_x;
    Eigen::VectorXd worst_z;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
};

MonotonicityEstimate estimate_monotonicity(
    const Game& game,
    const Box& box,
    std::size_t n_samples,
    std::uint64_t seed);

// ---------------------------------------------------------------------------
// Lyapunov machinery
// ---------------------------------------------------------------------------

/// Solves P M + M^T P = Q for symmetric P.
///
/// Requires -M Hurwitz (throws Error(NotHurwitz)) and Q symmetric positive
/// definite. Solved as a dense system in the k(k+1)/2 upper-triangular
/// unknowns of P.
Eigen::MatrixXd solve_lyapunov(const Eigen::MatrixXd& M, const Eigen::MatrixXd& Q);

/// Quadratic candidate
///   V = c/2 (x - x*)^T kbar^{-1} (x - x*) + (1 - c) ybar^T P1 ybar
/// with ybar = y - 1 (x) x the estimate error relative to the quasi-steady
/// state, and P1 solving P1 M + M^T P1 = Q1 for the estimate system matrix
/// M = diag(m_ij) (L (x) I + B0).
struct LyapunovMonitor
{
    double c = 0.5;
    Eigen::MatrixXd P1;
    Eigen::MatrixXd Q1;
    Eigen::VectorXd kbar_inv;

    double value(const SeekerState& s, const Eigen::VectorXd& x_star) const;
};

/// c must lie in (0, 1). Q1 defaults to the identity; kbar / gains default to
/// ones as in SeekerParams.
LyapunovMonitor make_lyapunov_monitor(
    const CommGraph& graph,
    const SeekerParams& params,
    double c = 0.5,
    const std::optional<Eigen::MatrixXd>& Q1 = std::nullopt);

struct LyapunovSeries
{
    std::vector<double> times;
    std::vector<double> V;
    /// Central differences of V (one-sided at the ends).
    std::vector<double> V_dot;
    /// Fraction of samples at or after the burn-in with V_dot < 0.
    double decrease_fraction = 0.0;
    std::size_t burn_in_index = 0;
};

LyapunovSeries lyapunov_along_trajectory(
    const LyapunovMonitor& mon,
    const Trajectory& traj,
    const Eigen::VectorXd& x_star,
    double burn_in_fraction = 0.05);

// ---------------------------------------------------------------------------
// Convergence rate
// ---------------------------------------------------------------------------

struct RateFit
{
    double rate = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    std::size_t points = 0;
};

/// Least-squares line through (t, ln e); rate is the negated slope.
/// Throws Error(EmptyWindow) with fewer than 2 points and
/// Error(NonpositiveError) if any error is <= 0.
RateFit fit_exponential_rate(
    std::span<const double> times,
    std::span<const double> errors);

/// Same fit restricted to t in [t0 + lo (T - t0), t0 + hi (T - t0)].
RateFit fit_exponential_rate_window(
    std::span<const double> times,
    std::span<const double> errors,
    double lo_fraction = 0.2,
    double hi_fraction = 0.8);

}  // namespace nashseek
