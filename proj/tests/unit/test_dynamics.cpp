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
#include "nashseek/trajectory_io.hpp"

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>
#include <sstream>

using namespace nashseek;

namespace
{

std::shared_ptr<QuadraticGame> two_player()
{
    Eigen::MatrixXd h1(2, 2), h2(2, 2);
    h1 << -2, 1, 1, 0;
    h2 << 0, 1, 1, -2;
    return std::make_shared<QuadraticGame>(
        std::vector<Eigen::MatrixXd>{h1, h2}, Eigen::MatrixXd::Identity(2, 2), Eigen::VectorXd::Zero(2));
}

Eigen::VectorXd vec(const EstimateMatrix& Y)
{
    return Eigen::Map<const Eigen::VectorXd>(Y.data(), Y.size());
}

}  // namespace

TEST_CASE("rhs by hand on two players")
{
    SeekerParams p;
    p.delta = 0.1;
    SeekerState s;
    s.x = Eigen::Vector2d(1.0, 0.0);
    s.Y = EstimateMatrix(2, 2);
    s.Y << 1, 2, 3, 4;
    const auto d = rhs(*two_player(), CommGraph::path(2), p, s);
    // player 1 evaluates at its row (1, 2): -2 + 2 + 1 = 1
    // player 2 evaluates at its row (3, 4): 3 - 8 + 1 = -4
    CHECK(d.dx(0) == doctest::Approx(0.1));
    CHECK(d.dx(1) == doctest::Approx(-0.4));
    // dy_ij = -(sum_k a_ik (y_ij - y_kj) + a_ij (y_ij - x_j))
    CHECK(d.dY(0, 0) == doctest::Approx(2.0));   // -(1 - 3)
    CHECK(d.dY(0, 1) == doctest::Approx(0.0));   // -((2 - 4) + (2 - 0))
    CHECK(d.dY(1, 0) == doctest::Approx(-4.0));  // -((3 - 1) + (3 - 1))
    CHECK(d.dY(1, 1) == doctest::Approx(-2.0));  // -(4 - 2)
}

TEST_CASE("property: estimate dynamics equal -M vec(Y) + B0 (1 (x) x)")
{
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    const auto game = make_example3();
    for (const auto& graph : {CommGraph::cycle(5), CommGraph::star(5), CommGraph::path(5)})
    {
        const Eigen::MatrixXd M = estimation_matrix(graph);
        SeekerParams p;
        SeekerState s;
        s.x = Eigen::VectorXd(5);
        s.Y = EstimateMatrix(5, 5);
        for (int i = 0; i < 5; ++i)
        {
            s.x(i) = u(rng);
            for (int j = 0; j < 5; ++j)
            {
                s.Y(i, j) = u(rng);
            }
        }
        Eigen::VectorXd b0x(25);
        for (int i = 0; i < 5; ++i)
        {
            for (int j = 0; j < 5; ++j)
            {
                b0x(i * 5 + j) = graph.adjacency()(i, j) * s.x(j);
            }
        }
        const auto d = rhs(*game, graph, p, s);
        CHECK((vec(d.dY) - (-M * vec(s.Y) + b0x)).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("property: dY is exactly zero at Y = 1 (x) x")
{
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    const auto game = make_example2();
    SeekerParams p;
    Eigen::MatrixXd gains(5, 5);
    for (int i = 0; i < 25; ++i)
    {
        gains(i / 5, i % 5) = 0.5 + (i % 7);
    }
    p.gains = gains;
    for (int trial = 0; trial < 100; ++trial)
    {
        Eigen::VectorXd x(5);
        for (int i = 0; i < 5; ++i)
        {
            x(i) = u(rng);
        }
        const auto d = rhs(*game, CommGraph::cycle(5), p, SeekerState::consensus(x));
        CHECK(d.dY.cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("gains scale the estimate dynamics entrywise")
{
    SeekerParams p;
    SeekerState s;
    s.x = Eigen::Vector2d(0.0, 0.0);
    s.Y = EstimateMatrix(2, 2);
    s.Y << 1, 2, 3, 4;
    const auto base = rhs(*two_player(), CommGraph::path(2), p, s);
    p.gains = Eigen::MatrixXd::Constant(2, 2, 3.0);
    const auto scaled = rhs(*two_player(), CommGraph::path(2), p, s);
    CHECK((scaled.dY - 3.0 * base.dY).cwiseAbs().maxCoeff() < 1e-12);
    p.kbar = Eigen::Vector2d(2.0, 0.5);
    const auto k = rhs(*two_player(), CommGraph::path(2), p, s);
    CHECK(k.dx(0) == doctest::Approx(2.0 * base.dx(0)));
    CHECK(k.dx(1) == doctest::Approx(0.5 * base.dx(1)));
}

TEST_CASE("rhs vanishes at the quasi-steady equilibrium")
{
    SeekerParams p;
    const Eigen::VectorXd x2 = Eigen::VectorXd::Zero(5);
    const auto d2 = rhs(*make_example2(), CommGraph::cycle(5), p, SeekerState::consensus(x2));
    CHECK(d2.dx.cwiseAbs().maxCoeff() <= 1e-10);

    const auto g3 = make_example3();
    const auto d3 = rhs(*g3, CommGraph::cycle(5), p, SeekerState::consensus(quadratic_nash(*g3)));
    CHECK(d3.dx.cwiseAbs().maxCoeff() <= 1e-10);

    const auto d = rhs(*two_player(), CommGraph::path(2), p, SeekerState::consensus(Eigen::Vector2d(1.0, 1.0)));
    CHECK(d.dx.cwiseAbs().maxCoeff() <= 1e-10);
    CHECK(d.dY.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("integration converges on the two-player game")
{
    SeekerParams p;
    p.delta = 0.1;
    p.t_end = 100.0;
    p.record_every = 100;
    const Eigen::Vector2d xs(1.0, 1.0);
    const auto traj = integrate(*two_player(), CommGraph::path(2), p, Eigen::Vector2d(-3.0, 4.0), std::nullopt, xs);
    CHECK((traj.final_state.x - xs).cwiseAbs().maxCoeff() < 1e-6);
    CHECK(traj.graph_connected);
    CHECK(traj.action_error.size() == traj.sample_count());
    CHECK(traj.action_error.front() == doctest::Approx(std::sqrt(16.0 + 9.0)));
}

TEST_CASE("sampling grid")
{
    SeekerParams p;
    p.dt = 0.01;
    p.t_end = 1.0;
    p.record_every = 7;
    const auto traj = integrate(*two_player(), CommGraph::path(2), p, Eigen::Vector2d(0.0, 0.0));
    // 100 steps, samples at 0, 7, ..., 98
    REQUIRE(traj.sample_count() == 15);
    CHECK(traj.times[3] == 21 * 0.01);
    CHECK(traj.action_error.empty());
    CHECK(traj.states.front().Y == SeekerState::consensus(Eigen::Vector2d(0.0, 0.0)).Y);
    CHECK(traj.final_state.x != traj.states.back().x);
}

TEST_CASE("integration is bit-for-bit deterministic")
{
    SeekerParams p;
    p.delta = 0.02;
    p.t_end = 20.0;
    const auto g = make_example3();
    const Eigen::VectorXd x0 = Eigen::VectorXd::Constant(5, -10.0);
    const auto a = integrate(*g, CommGraph::cycle(5), p, x0);
    const auto b = integrate(*g, CommGraph::cycle(5), p, x0);
    REQUIRE(a.sample_count() == b.sample_count());
    for (std::size_t k = 0; k < a.sample_count(); ++k)
    {
        CHECK(std::memcmp(a.states[k].Y.data(), b.states[k].Y.data(), 25 * sizeof(double)) == 0);
    }
}

TEST_CASE("divergence is reported with time and state")
{
    SeekerParams p;
    p.delta = 100.0;
    p.t_end = 10.0;
    Eigen::VectorXd x0(5);
    x0 << 1, 2, 0, 0, 0;
    try
    {
        integrate(*make_example1(), CommGraph::cycle(5), p, x0);
        FAIL("expected divergence");
    }
    catch (const DivergedError& e)
    {
        CHECK(e.code() == ErrorCode::Diverged);
        CHECK(e.time() > 0.0);
        CHECK(e.time() < 10.0);
        CHECK(e.state().x.size() == 5);
    }
}

TEST_CASE("disconnected graphs are allowed but flagged")
{
    SeekerParams p;
    p.t_end = 1.0;
    const auto traj = integrate(
        *make_example3(), CommGraph::from_edges(5, {{0, 1}, {2, 3}}), p, Eigen::VectorXd::Zero(5));
    CHECK(!traj.graph_connected);
    CHECK(!traj.warnings.empty());
}

TEST_CASE("parameter and dimension validation")
{
    const auto g = make_example3();
    const auto graph = CommGraph::cycle(5);
    const Eigen::VectorXd x0 = Eigen::VectorXd::Zero(5);
    SeekerParams p;
    p.delta = 0.0;
    CHECK_THROWS_AS(integrate(*g, graph, p, x0), Error);
    p = {};
    p.dt = -1.0;
    CHECK_THROWS_AS(integrate(*g, graph, p, x0), Error);
    p = {};
    p.record_every = 0;
    CHECK_THROWS_AS(integrate(*g, graph, p, x0), Error);
    p = {};
    p.kbar = Eigen::VectorXd::Ones(4);
    CHECK_THROWS_AS(integrate(*g, graph, p, x0), Error);
    p = {};
    CHECK_THROWS_AS(integrate(*g, graph, p, Eigen::VectorXd::Zero(4)), Error);
    CHECK_THROWS_AS(integrate(*g, CommGraph::cycle(4), p, x0), Error);
    CHECK_THROWS_AS(integrate(*g, graph, p, x0, EstimateMatrix::Zero(5, 4)), Error);
}

TEST_CASE("trajectory CSV")
{
    SeekerParams p;
    p.t_end = 0.05;
    p.record_every = 25;
    const Eigen::Vector2d xs(1.0, 1.0);
    const auto traj = integrate(*two_player(), CommGraph::path(2), p, Eigen::Vector2d(0.0, 0.5), std::nullopt, xs);

    std::ostringstream os;
    write_trajectory_csv(os, traj, true);
    std::istringstream lines(os.str());
    std::string header, first;
    std::getline(lines, header);
    std::getline(lines, first);
    CHECK(header == "t,x_1,x_2,err,consensus_residual,y_1_1,y_1_2,y_2_1,y_2_2");
    CHECK(first == "0,0,0.5,1.1180339887498949,0,0,0.5,0,0.5");

    std::istringstream is(os.str());
    const auto series = read_error_series(is);
    REQUIRE(series.times.size() == traj.sample_count());
    for (std::size_t k = 0; k < series.times.size(); ++k)
    {
        CHECK(series.times[k] == traj.times[k]);
        CHECK(series.errors[k] == traj.action_error[k]);  // %.17g round-trips
    }

    const auto plain = integrate(*two_player(), CommGraph::path(2), p, Eigen::Vector2d(0.0, 0.5));
    std::ostringstream no_ref;
    write_trajectory_csv(no_ref, plain, false);
    CHECK(no_ref.str().find(",nan,") != std::string::npos);
    std::istringstream nan_in(no_ref.str());
    CHECK_THROWS_AS(read_error_series(nan_in), Error);

    std::istringstream missing("t,x_1\n0,1\n");
    CHECK_THROWS_AS(read_error_series(missing), Error);
    std::istringstream ragged("t,err\n0,1\n1\n");
    CHECK_THROWS_AS(read_error_series(ragged), Error);
    std::istringstream garbage("t,err\n0,abc\n");
    CHECK_THROWS_AS(read_error_series(garbage), Error);
    CHECK_THROWS_AS(read_error_series(std::string("/nonexistent/file.csv")), Error);
}
