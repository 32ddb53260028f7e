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

#include "nashseek/games.hpp"

#include "nashseek/error.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace nashseek
{
namespace
{

void require_dim(std::span<const double> z, std::size_t n)
{
    if (z.size() != n)
    {
        throw Error(
            ErrorCode::DimensionMismatch,
            "expected a point of dimension " + std::to_string(n) + ", got "
                + std::to_string(z.size()));
    }
}

void require_player(std::size_t i, std::size_t n)
{
    if (i >= n)
    {
        throw Error(
            ErrorCode::InvalidArgument,
            "player index " + std::to_string(i) + " out of range");
    }
}

Eigen::Map<const Eigen::VectorXd> as_vector(std::span<const double> z)
{
    return {z.data(), static_cast<Eigen::Index>(z.size())};
}

class Example1 final : public Game
{
   public:
    std::size_t size() const noexcept override { return 5; }

    double payoff(std::size_t i, std::span<const double> z) const override
    {
        require_player(i, 5);
        require_dim(z, 5);
        const double x1 = z[0], x2 = z[1], x3 = z[2], x4 = z[3], x5 = z[4];
        switch (i)
        {
            case 0:
                return -x1 * x1 * x1 + 3.0 * x1 * x2;
            case 1:
            {
                const double r = -2.0 * x1 + 4.0 * x2 + 0.5 * x4 + x5;
                return -r * r + 48.0 * x2;
            }
            case 2:
            {
                const double r = x1 + 4.0 * x3 - x4 - x5;
                return -r * r;
            }
            case 3:
            {
                const double r = 2.0 * x1 + 4.0 * x3 + 8.0 * x4 - x5;
                return -r * r;
            }
            default:
            {
                const double r = x1 + 4.0 * x3 + 8.0 * x4 + 17.0 * x5;
                return -r * r;
            }
        }
    }

    double grad(std::size_t i, std::span<const double> z) const override
    {
        require_player(i, 5);
        require_dim(z, 5);
        const double x1 = z[0], x2 = z[1], x3 = z[2], x4 = z[3], x5 = z[4];
        switch (i)
        {
            case 0:
                return -3.0 * x1 * x1 + 3.0 * x2;
            case 1:
                return -8.0 * (-2.0 * x1 + 4.0 * x2 + 0.5 * x4 + x5) + 48.0;
            case 2:
                return -8.0 * (x1 + 4.0 * x3 - x4 - x5);
            case 3:
                return -16.0 * (2.0 * x1 + 4.0 * x3 + 8.0 * x4 - x5);
            default:
                return -34.0 * (x1 + 4.0 * x3 + 8.0 * x4 + 17.0 * x5);
        }
    }

    std::string name() const override { return "example1"; }
};

class Example2 final : public Game
{
   public:
    explicit Example2(Example2Params params) : params_(std::move(params)) {}

    std::size_t size() const noexcept override { return 5; }

    double payoff(std::size_t i, std::span<const double> z) const override
    {
        require_player(i, 5);
        require_dim(z, 5);
        return params_.m[i] * potential(z) + params_.d[i];
    }

    double grad(std::size_t i, std::span<const double> z) const override
    {
        require_player(i, 5);
        require_dim(z, 5);
        const double x1 = z[0], x2 = z[1], x3 = z[2], x4 = z[3], x5 = z[4];
        double df = 0.0;
        switch (i)
        {
            case 0:
                df = -(x1 * x1 * x1 / 3.0 + 10.0 * x1 + 2.0 * x2);
                break;
            case 1:
                df = -(2.0 * x1 + 10.0 * x2 + x3 + x5);
                break;
            case 2:
                df = -(x2 + 5.0 * x3 + x4);
                break;
            case 3:
                df = -(x3 + 10.0 * x4 + 2.0 * x5);
                break;
            default:
                df = -(x2 + 2.0 * x4 + 6.0 * x5);
                break;
        }
        return params_.m[i] * df;
    }

    std::string name() const override { return "example2"; }

   private:
    static double potential(std::span<const double> z)
    {
        const double x1 = z[0], x2 = z[1], x3 = z[2], x4 = z[3], x5 = z[4];
        return -(x1 * x1 * x1 * x1 / 12.0 + 5.0 * x1 * x1 + 2.0 * x1 * x2
                 + 5.0 * x2 * x2 + x2 * x3 + x2 * x5 + 2.5 * x3 * x3
                 + x3 * x4 + 5.0 * x4 * x4 + 2.0 * x4 * x5 + 3.0 * x5 * x5);
    }

    Example2Params params_;
};

}  // namespace

QuadraticGame::QuadraticGame(
    std::vector<Eigen::MatrixXd> h,
    Eigen::MatrixXd v,
    Eigen::VectorXd g,
    std::string name)
    : h_(std::move(h)), v_(std::move(v)), g_(std::move(g)), name_(std::move(name))
{
    const auto n = g_.size();
    if (n < 1)
    {
        throw Error(ErrorCode::InvalidArgument, "quadratic game needs n >= 1");
    }
    if (static_cast<Eigen::Index>(h_.size()) != n || v_.rows() != n
        || v_.cols() != n)
    {
        throw Error(
            ErrorCode::DimensionMismatch,
            "quadratic game expects n coefficient matrices, an n x n linear "
            "term and n constants");
    }
    H_.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
    {
        const Eigen::MatrixXd& hi = h_[static_cast<std::size_t>(i)];
        if (hi.rows() != n || hi.cols() != n)
        {
            throw Error(
                ErrorCode::DimensionMismatch,
                "h for player " + std::to_string(i + 1) + " must be n x n");
        }
        if ((hi - hi.transpose()).cwiseAbs().maxCoeff() > 0.0)
        {
            throw Error(
                ErrorCode::InvalidArgument,
                "h for player " + std::to_string(i + 1) + " must be symmetric");
        }
        if (!(hi(i, i) < 0.0))
        {
            throw Error(
                ErrorCode::InvalidArgument,
                "own quadratic coefficient h^i_ii must be negative (player "
                    + std::to_string(i + 1) + ")");
        }
        H_.row(i) = hi.row(i);
    }
}

double QuadraticGame::payoff(std::size_t i, std::span<const double> z) const
{
    require_player(i, size());
    require_dim(z, size());
    const auto x = as_vector(z);
    const auto& hi = h_[i];
    return 0.5 * x.dot(hi * x) + v_.row(static_cast<Eigen::Index>(i)).dot(x)
           + g_(static_cast<Eigen::Index>(i));
}

double QuadraticGame::grad(std::size_t i, std::span<const double> z) const
{
    require_player(i, size());
    require_dim(z, size());
    const auto row = static_cast<Eigen::Index>(i);
    return H_.row(row).dot(as_vector(z)) + v_(row, row);
}

Eigen::MatrixXd QuadraticGame::H() const { return H_; }

Eigen::VectorXd QuadraticGame::own_linear() const { return v_.diagonal(); }

FunctionGame::FunctionGame(std::size_t n, Fn payoff, Fn grad, std::string name)
    : n_(n), payoff_(std::move(payoff)), grad_(std::move(grad)), name_(std::move(name))
{
    if (n_ < 1)
    {
        throw Error(ErrorCode::InvalidArgument, "game needs n >= 1");
    }
    if (!payoff_ || !grad_)
    {
        throw Error(
            ErrorCode::InvalidArgument, "payoff and gradient must be callable");
    }
}

std::shared_ptr<const Game> make_example1()
{
    return std::make_shared<Example1>();
}

std::shared_ptr<const Game> make_example2(const Example2Params& params)
{
    if (params.m.size() != 5 || params.d.size() != 5)
    {
        throw Error(
            ErrorCode::DimensionMismatch, "example2 takes 5 weights and 5 offsets");
    }
    if (std::any_of(params.m.begin(), params.m.end(), [](double m) {
            return !(m > 0.0);
        }))
    {
        throw Error(ErrorCode::InvalidArgument, "example2 weights m_i must be > 0");
    }
    return std::make_shared<Example2>(params);
}

std::shared_ptr<const QuadraticGame> make_example3(const Example3Params& params)
{
    const std::size_t n = params.rho.size();
    if (n < 1 || params.x_desired.size() != n)
    {
        throw Error(
            ErrorCode::DimensionMismatch,
            "example3 needs matching rho and x_desired of length >= 1");
    }
    if (std::any_of(params.rho.begin(), params.rho.end(), [](double r) {
            return !(r > 0.0);
        }))
    {
        throw Error(ErrorCode::InvalidArgument, "example3 requires rho_i > 0");
    }
    if (!(params.p0 > 0.0))
    {
        throw Error(ErrorCode::InvalidArgument, "example3 requires p0 > 0");
    }

    // -rho (x_i - xd)^2 - (p0 sum_j x_j + q0) x_i
    //   = -(rho + p0) x_i^2 - p0 sum_{j != i} x_i x_j
    //     + (2 rho xd - q0) x_i - rho xd^2
    const auto ni = static_cast<Eigen::Index>(n);
    std::vector<Eigen::MatrixXd> h(n, Eigen::MatrixXd::Zero(ni, ni));
    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(ni, ni);
    Eigen::VectorXd g(ni);
    for (Eigen::Index i = 0; i < ni; ++i)
    {
        const auto k = static_cast<std::size_t>(i);
        const double rho = params.rho[k];
        const double xd = params.x_desired[k];
        Eigen::MatrixXd& hi = h[k];
        hi.row(i).setConstant(-params.p0);
        hi.col(i).setConstant(-params.p0);
        hi(i, i) = -2.0 * (rho + params.p0);
        v(i, i) = 2.0 * rho * xd - params.q0;
        g(i) = -rho * xd * xd;
    }
    return std::make_shared<QuadraticGame>(
        std::move(h), std::move(v), std::move(g), "example3");
}

std::shared_ptr<const Game> make_builtin(const std::string& name)
{
    if (name == "example1")
    {
        return make_example1();
    }
    if (name == "example2")
    {
        return make_example2();
    }
    if (name == "example3")
    {
        return make_example3();
    }
    throw Error(
        ErrorCode::InvalidArgument,
        "unknown built-in game '" + name
            + "' (expected example1, example2 or example3)");
}

Eigen::VectorXd pseudogradient(const Game& game, std::span<const double> x)
{
    const std::size_t n = game.size();
    require_dim(x, n);
    Eigen::VectorXd out(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
    {
        out(static_cast<Eigen::Index>(i)) = game.grad(i, x);
    }
    return out;
}

double grad_check(const Game& game, std::span<const double> x, double step)
{
    if (!(step > 0.0))
    {
        throw Error(ErrorCode::InvalidArgument, "finite-difference step must be > 0");
    }
    const std::size_t n = game.size();
    require_dim(x, n);
    std::vector<double> z(x.begin(), x.end());
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
    {
        const double xi = z[i];
        z[i] = xi + step;
        const double up = game.payoff(i, z);
        z[i] = xi - step;
        const double down = game.payoff(i, z);
        z[i] = xi;
        const double fd = (up - down) / (2.0 * step);
        const double g = game.grad(i, z);
        worst = std::max(worst, std::abs(g - fd) / std::max(1.0, std::abs(g)));
    }
    return worst;
}

Eigen::VectorXd quadratic_nash(const QuadraticGame& qg)
{
    const Eigen::MatrixXd H = qg.H();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(H);
    const auto& sv = svd.singularValues();
    const double smax = sv(0);
    const double smin = sv(sv.size() - 1);
    if (!(smin > 0.0) || smax / smin > 1e12)
    {
        throw Error(
            ErrorCode::SingularMatrix,
            "H is numerically singular; the quadratic game has no unique Nash "
            "equilibrium");
    }
    return -H.fullPivLu().solve(qg.own_linear());
}

NashCandidate make_candidate(const Game& game, Eigen::VectorXd x)
{
    NashCandidate c;
    c.stationarity_residual = pseudogradient(game, as_span(x)).cwiseAbs().maxCoeff();
    c.x_star = std::move(x);
    return c;
}

}  // namespace nashseek
