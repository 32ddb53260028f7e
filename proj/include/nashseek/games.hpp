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

#include <Eigen/Dense>

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace nashseek
{

inline std::span<const double> as_span(const Eigen::VectorXd& v)
{
    return {v.data(), static_cast<std::size_t>(v.size())};
}

/// An n-player continuous game. Player i maximizes payoff(i, x) over its own
/// action x_i.
///
/// grad(i, z) is the partial derivative of payoff(i, .) with respect to the
/// i-th coordinate, evaluated at an arbitrary point z. In the seeking dynamics
/// z is player i's estimate vector rather than the true action profile, so
/// both functions must be defined on all of R^n.
///
/// Implementations are immutable after construction and must be reentrant.
class Game
{
   public:
    virtual ~Game() = default;

    virtual std::size_t size() const noexcept = 0;
    virtual double payoff(std::size_t i, std::span<const double> z) const = 0;
    virtual double grad(std::size_t i, std::span<const double> z) const = 0;
    virtual std::string name() const { return "custom"; }
};

/// f_i(x) = 1/2 sum_jk h^i_jk x_j x_k + sum_j v^i_j x_j + g_i
///
/// h[i] is player i's symmetric n x n coefficient matrix, row i of v holds
/// player i's linear coefficients. Requires h^i_ii < 0 for every player.
class QuadraticGame final : public Game
{
   public:
    QuadraticGame(
        std::vector<Eigen::MatrixXd> h,
        Eigen::MatrixXd v,
        Eigen::VectorXd g,
        std::string name = "quadratic");

    std::size_t size() const noexcept override
    {
        return static_cast<std::size_t>(g_.size());
    }
    double payoff(std::size_t i, std::span<const double> z) const override;
    double grad(std::size_t i, std::span<const double> z) const override;
    std::string name() const override { return name_; }

    const std::vector<Eigen::MatrixXd>& h() const noexcept { return h_; }
    const Eigen::MatrixXd& v() const noexcept { return v_; }
    const Eigen::VectorXd& g() const noexcept { return g_; }

    /// Row i is [h^i_i1 ... h^i_in]; the pseudogradient is H x + own_linear().
    Eigen::MatrixXd H() const;
    /// [v^1_1, v^2_2, ..., v^n_n].
    Eigen::VectorXd own_linear() const;

   private:
    std::vector<Eigen::MatrixXd> h_;
    Eigen::MatrixXd v_;
    Eigen::VectorXd g_;
    Eigen::MatrixXd H_;
    std::string name_;
};

/// Game backed by user callables. Used for custom games registered through the
/// C API and for small test games.
class FunctionGame final : public Game
{
   public:
    using Fn = std::function<double(std::size_t, std::span<const double>)>;

    FunctionGame(std::size_t n, Fn payoff, Fn grad, std::string name = "custom");

    std::size_t size() const noexcept override { return n_; }
    double payoff(std::size_t i, std::span<const double> z) const override
    {
        return payoff_(i, z);
    }
    double grad(std::size_t i, std::span<const double> z) const override
    {
        return grad_(i, z);
    }
    std::string name() const override { return name_; }

   private:
    std::size_t n_;
    Fn payoff_;
    Fn grad_;
    std::string name_;
};

struct Example2Params
{
    std::vector<double> m{1.0, 5.0, 2.0, 3.0, 2.0};
    std::vector<double> d{0.0, 0.0, 0.0, 0.0, 0.0};
};

struct Example3Params
{
    std::vector<double> rho{1.0, 1.0, 1.0, 1.0, 1.0};
    double p0 = 0.1;
    double q0 = 10.0;
    std::vector<double> x_desired{10.0, 15.0, 20.0, 25.0, 30.0};
};

/// Five players, cubic own payoff for player 1 and squared-residual payoffs
/// for the rest. Two stationary points; only one is a Nash equilibrium.
std::shared_ptr<const Game> make_example1();

/// f_i = m_i f(x) + d_i with a shared strongly concave quartic f (potential
/// game, maximum at the origin).
std::shared_ptr<const Game> make_example2(const Example2Params& params = {});

/// f_i = -rho_i (x_i - x^d_i)^2 - (p0 sum_j x_j + q0) x_i, an energy
/// consumption game. Any player count; returned in quadratic form.
std::shared_ptr<const QuadraticGame> make_example3(
    const Example3Params& params = {});

/// Built-in game by name: "example1", "example2", "example3".
std::shared_ptr<const Game> make_builtin(const std::string& name);

/// [df_1/dx_1 (x), ..., df_n/dx_n (x)].
Eigen::VectorXd pseudogradient(const Game& game, std::span<const double> x);

/// max_i |grad(i, x) - central difference of payoff(i, .) along x_i|
///       / max(1, |grad(i, x)|)
double grad_check(const Game& game, std::span<const double> x, double step);

/// x* = -H^{-1} v. Throws Error(SingularMatrix) when cond(H) > 1e12.
Eigen::VectorXd quadratic_nash(const QuadraticGame& qg);

struct NashCandidate
{
    Eigen::VectorXd x_star;
    /// max_i |df_i/dx_i (x*)|
    double stationarity_residual = 0.0;
};

NashCandidate make_candidate(const Game& game, Eigen::VectorXd x);

}  // namespace nashseek
