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


#include "nashseek/error.hpp"
#include "nashseek/games.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace nashseek;

namespace
{

std::shared_ptr<QuadraticGame> two_player()
{
    // H = [[-2, 1], [1, -2]], own linear terms v = [1, 1]
    Eigen::MatrixXd h1(2, 2), h2(2, 2);
    h1 << -2, 1, 1, 0;
    h2 << 0, 1, 1, -2;
    Eigen::MatrixXd v = Eigen::MatrixXd::Identity(2, 2);
    return std::make_shared<QuadraticGame>(
        std::vector<Eigen::MatrixXd>{h1, h2}, v, Eigen::VectorXd::Zero(2));
}

}  // namespace

TEST_CASE("example1 gradients by hand")
{
    const auto g = make_example1();
    const std::vector<double> x{1.0, 2.0, 0.0, 0.0, 0.0};
    const Eigen::VectorXd G = pseudogradient(*g, x);
    CHECK(G(0) == doctest::Approx(3.0));    // -3 + 6
    CHECK(G(1) == doctest::Approx(0.0));    // -8 (-2 + 8) + 48
    CHECK(G(2) == doctest::Approx(-8.0));
    CHECK(G(3) == doctest::Approx(-32.0));
    CHECK(G(4) == doctest::Approx(-34.0));
}

TEST_CASE("example1 has two stationary points")
{
    const auto g = make_example1();
    const std::vector<double> ne{1.5, 2.25, -19.0 / 48.0, -1.0 / 6.0, 1.0 / 12.0};
    const std::vector<double> other{-1.0, 1.0, 19.0 / 72.0, 1.0 / 9.0, -1.0 / 18.0};
    CHECK(pseudogradient(*g, ne).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(pseudogradient(*g, other).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("example2 gradients by hand")
{
    const auto g = make_example2();
    const std::vector<double> e1{1.0, 0.0, 0.0, 0.0, 0.0};
    const Eigen::VectorXd G = pseudogradient(*g, e1);
    CHECK(G(0) == doctest::Approx(-31.0 / 3.0));
    CHECK(G(1) == doctest::Approx(-10.0));  // m_2 = 5 times -2
    CHECK(G(2) == 0.0);
    CHECK(G(3) == 0.0);
    CHECK(G(4) == 0.0);
    CHECK(pseudogradient(*g, std::vector<double>(5, 0.0)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("example2 parameter validation")
{
    Example2Params p;
    p.m[2] = 0.0;
    CHECK_THROWS_AS(make_example2(p), Error);
    p = {};
    p.m.pop_back();
    CHECK_THROWS_AS(make_example2(p), Error);
}

TEST_CASE("example3 equilibrium against the scalar first-order conditions")
{
    // (2 rho + p0) x_i + p0 S = 2 rho xd_i - q0, summed over i gives S.
    const Example3Params p;
    const double rho = 1.0, p0 = p.p0, q0 = p.q0;
    double sum_xd = 0.0;
    for (double v : p.x_desired)
    {
        sum_xd += v;
    }
    const double S = (2.0 * rho * sum_xd - 5.0 * q0) / (2.0 * rho + p0 + 5.0 * p0);
    const Eigen::VectorXd x = quadratic_nash(*make_example3(p));
    for (int i = 0; i < 5; ++i)
    {
        const double xi = (2.0 * rho * p.x_desired[i] - q0 - p0 * S) / (2.0 * rho + p0);
        CHECK(x(i) == doctest::Approx(xi).epsilon(1e-12));
    }
    const double published[] = {2.0147, 6.7766, 11.5385, 16.3004, 21.0623};
    for (int i = 0; i < 5; ++i)
    {
        CHECK(std::abs(x(i) - published[i]) <= 0.5e-4);
    }
}

TEST_CASE("example3 quadratic form")
{
    const auto g = make_example3();
    const Eigen::MatrixXd H = g->H();
    for (int i = 0; i < 5; ++i)
    {
        CHECK(H(i, i) == doctest::Approx(-2.2));
        for (int j = 0; j < 5; ++j)
        {
            if (j != i)
            {
                CHECK(H(i, j) == doctest::Approx(-0.1));
            }
        }
    }
    // payoff from the defining formula
    const std::vector<double> x{1.0, -2.0, 3.0, 0.5, 4.0};
    double sum = 0.0;
    for (double v : x)
    {
        sum += v;
    }
    const double f2 = -(x[1] - 15.0) * (x[1] - 15.0) - (0.1 * sum + 10.0) * x[1];
    CHECK(g->payoff(1, x) == doctest::Approx(f2));
    CHECK_THROWS_AS(make_example3(Example3Params{{1.0, 0.0}, 0.1, 10.0, {1.0, 2.0}}), Error);
    CHECK(make_example3(Example3Params{{1.0, 2.0, 3.0}, 0.1, 10.0, {1.0, 2.0, 3.0}})->size() == 3);
}

TEST_CASE("two-player quadratic game solved by hand")
{
    const Eigen::VectorXd x = quadratic_nash(*two_player());
    CHECK(x(0) == doctest::Approx(1.0));
    CHECK(x(1) == doctest::Approx(1.0));
}

TEST_CASE("H = -I, v = 0 has equilibrium at the origin")
{
    std::vector<Eigen::MatrixXd> h(3, Eigen::MatrixXd::Zero(3, 3));
    for (int i = 0; i < 3; ++i)
    {
        h[i](i, i) = -1.0;
    }
    const QuadraticGame g(h, Eigen::MatrixXd::Zero(3, 3), Eigen::VectorXd::Zero(3));
    CHECK(quadratic_nash(g).norm() == 0.0);
}

TEST_CASE("quadratic game validation")
{
    Eigen::MatrixXd h1(2, 2), h2(2, 2);
    h1 << -1, 1, 1, 0;
    h2 << 0, 1, 1, -1;
    const Eigen::MatrixXd v = Eigen::MatrixXd::Zero(2, 2);
    const Eigen::VectorXd g = Eigen::VectorXd::Zero(2);
    // H = [[-1, 1], [1, -1]] is singular
    CHECK_THROWS_AS(quadratic_nash(QuadraticGame({h1, h2}, v, g)), Error);

    Eigen::MatrixXd bad = h1;
    bad(0, 1) = 2.0;
    CHECK_THROWS_AS(QuadraticGame({bad, h2}, v, g), Error);  // asymmetric
    bad = h1;
    bad(0, 0) = 0.0;
    CHECK_THROWS_AS(QuadraticGame({bad, h2}, v, g), Error);  // not own-concave
    CHECK_THROWS_AS(QuadraticGame({h1}, v, g), Error);
    CHECK_THROWS_AS(QuadraticGame({h1, h2}, Eigen::MatrixXd::Zero(2, 3), g), Error);
}

TEST_CASE("property: quadratic pseudogradient is H x + v")
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    const auto g = make_example3();
    const Eigen::MatrixXd H = g->H();
    const Eigen::VectorXd v = g->own_linear();
    for (int trial = 0; trial < 50; ++trial)
    {
        Eigen::VectorXd x(5);
        for (int i = 0; i < 5; ++i)
        {
            x(i) = u(rng);
        }
        const Eigen::VectorXd G = pseudogradient(*g, as_span(x));
        CHECK((G - (H * x + v)).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("grad_check on built-ins and a wrong gradient")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (const char* name : {"example1", "example2", "example3"})
    {
        const auto g = make_builtin(name);
        std::vector<double> x(5);
        for (auto& v : x)
        {
            v = u(rng);
        }
        CHECK(grad_check(*g, x, 1e-5) < 1e-6);
    }
    const FunctionGame wrong(
        1, [](std::size_t, std::span<const double> z) { return -z[0] * z[0]; },
        [](std::size_t, std::span<const double> z) { return -z[0]; });
    CHECK(grad_check(wrong, std::vector<double>{2.0}, 1e-5) > 0.1);
    CHECK_THROWS_AS(make_builtin("example4"), Error);
}

TEST_CASE("make_candidate reports the stationarity residual")
{
    Eigen::VectorXd x(2);
    x << 1.0, 0.5;
    const auto c = make_candidate(*two_player(), x);
    CHECK(c.stationarity_residual == doctest::Approx(1.0));  // row 2: 1 - 1 + 1
}
