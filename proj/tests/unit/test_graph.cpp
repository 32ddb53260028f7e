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
#include "nashseek/graph.hpp"

#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

using namespace nashseek;

TEST_CASE("cycle Laplacian spectrum matches 2 - 2 cos(2 pi k / n)")
{
    const Eigen::MatrixXd L = laplacian(CommGraph::cycle(5));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(L);
    std::vector<double> expected;
    for (int k = 0; k < 5; ++k)
    {
        expected.push_back(2.0 - 2.0 * std::cos(2.0 * std::numbers::pi * k / 5.0));
    }
    std::sort(expected.begin(), expected.end());
    for (int k = 0; k < 5; ++k)
    {
        CHECK(es.eigenvalues()(k) == doctest::Approx(expected[k]).epsilon(1e-12));
    }
}

TEST_CASE("two-node estimation matrix written out by hand")
{
    // L (x) I2 plus B0 = diag(a_00, a_01, a_10, a_11) = diag(0, 1, 1, 0)
    Eigen::MatrixXd expected(4, 4);
    expected << 1, 0, -1, 0,
                0, 2, 0, -1,
                -1, 0, 2, 0,
                0, -1, 0, 1;
    CHECK(estimation_matrix(CommGraph::path(2)).isApprox(expected, 0.0));
}

TEST_CASE("estimate_index is player-major")
{
    CHECK(estimate_index(5, 0, 0) == 0);
    CHECK(estimate_index(5, 0, 4) == 4);
    CHECK(estimate_index(5, 1, 0) == 5);
    CHECK(estimate_index(5, 4, 4) == 24);
}

TEST_CASE("presets")
{
    SUBCASE("cycle")
    {
        const auto g = CommGraph::cycle(5);
        for (std::size_t i = 0; i < 5; ++i)
        {
            CHECK(g.has_edge(i, (i + 1) % 5));
            CHECK(!g.has_edge(i, (i + 2) % 5));
        }
    }
    SUBCASE("two-node cycle is one edge")
    {
        const auto g = CommGraph::cycle(2);
        CHECK(g.adjacency()(0, 1) == 1.0);
        CHECK(laplacian(g)(0, 0) == 1.0);
    }
    SUBCASE("path, star, complete degrees")
    {
        CHECK(laplacian(CommGraph::path(4)).diagonal().sum() == 6.0);
        const auto s = laplacian(CommGraph::star(6));
        CHECK(s(0, 0) == 5.0);
        CHECK(s(3, 3) == 1.0);
        CHECK(laplacian(CommGraph::complete(4)).diagonal().sum() == 12.0);
    }
    SUBCASE("by name")
    {
        CHECK(CommGraph::preset("star", 4).adjacency() == CommGraph::star(4).adjacency());
        CHECK_THROWS_AS(CommGraph::preset("ring", 4), Error);
    }
}

TEST_CASE("constructor validation")
{
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(3, 3);
    a(0, 1) = 1.0;
    CHECK_THROWS_AS(CommGraph::from_adjacency(a), Error);  // asymmetric
    a(1, 0) = 1.0;
    CHECK_NOTHROW(CommGraph::from_adjacency(a));
    a(2, 2) = 1.0;
    CHECK_THROWS_AS(CommGraph::from_adjacency(a), Error);  // self-loop
    a(2, 2) = 0.0;
    a(0, 2) = a(2, 0) = 0.5;
    CHECK_THROWS_AS(CommGraph::from_adjacency(a), Error);  // weighted
    CHECK_THROWS_AS(CommGraph::from_adjacency(Eigen::MatrixXd::Zero(2, 3)), Error);
    CHECK_THROWS_AS(CommGraph::from_edges(3, {{0, 0}}), Error);
    CHECK_THROWS_AS(CommGraph::from_edges(3, {{0, 3}}), Error);
    const auto g = CommGraph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(g.has_edge(2, 1));
    CHECK(!g.has_edge(0, 2));
}

TEST_CASE("connectivity")
{
    CHECK(is_connected(CommGraph::path(6)));
    CHECK(!is_connected(CommGraph::from_edges(4, {{0, 1}, {2, 3}})));
    CHECK(!is_connected(CommGraph::from_edges(3, {})));
}

TEST_CASE("property: Laplacian of random graphs is symmetric PSD with zero row sums")
{
    std::mt19937_64 rng(7);
    std::bernoulli_distribution coin(0.4);
    for (int trial = 0; trial < 100; ++trial)
    {
        const std::size_t n = 1 + trial % 8;
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
        for (std::size_t i = 0; i < n; ++i)
        {
            for (std::size_t j = i + 1; j < n; ++j)
            {
                a(i, j) = a(j, i) = coin(rng) ? 1.0 : 0.0;
            }
        }
        const Eigen::MatrixXd L = laplacian(CommGraph::from_adjacency(a));
        CHECK(L.rowwise().sum().cwiseAbs().maxCoeff() == 0.0);
        CHECK(L.isApprox(L.transpose(), 0.0));
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(L);
        CHECK(es.eigenvalues().minCoeff() > -1e-12);
        // multiplicity of the zero eigenvalue counts components
        const long zeros = (es.eigenvalues().array().abs() < 1e-9).count();
        CHECK((zeros == 1) == is_connected(CommGraph::from_adjacency(a)));
    }
}
