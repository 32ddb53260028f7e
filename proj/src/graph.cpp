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

#include "nashseek/graph.hpp"

#include "nashseek/error.hpp"

#include <deque>
#include <string>

namespace nashseek
{

CommGraph CommGraph::from_adjacency(const Eigen::MatrixXd& adj)
{
    if (adj.rows() != adj.cols())
    {
        throw Error(ErrorCode::DimensionMismatch, "adjacency must be square");
    }
    if (adj.rows() < 1)
    {
        throw Error(ErrorCode::InvalidArgument, "graph needs at least 1 node");
    }
    for (Eigen::Index i = 0; i < adj.rows(); ++i)
    {
        if (adj(i, i) != 0.0)
        {
            throw Error(
                ErrorCode::InvalidArgument,
                "adjacency diagonal must be zero (node "
                    + std::to_string(i + 1) + ")");
        }
        for (Eigen::Index j = 0; j < adj.cols(); ++j)
        {
            const double a = adj(i, j);
            if (a != 0.0 && a != 1.0)
            {
                throw Error(
                    ErrorCode::InvalidArgument,
                    "adjacency entries must be 0 or 1");
            }
            if (a != adj(j, i))
            {
                throw Error(
                    ErrorCode::InvalidArgument,
                    "adjacency must be symmetric (undirected graph)");
            }
        }
    }
    return CommGraph(adj);
}

CommGraph CommGraph::from_edges(
    std::size_t n,
    const std::vector<std::pair<std::size_t, std::size_t>>& edges)
{
    if (n < 1)
    {
        throw Error(ErrorCode::InvalidArgument, "graph needs at least 1 node");
    }
    Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(
        static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (const auto& [i, j] : edges)
    {
        if (i >= n || j >= n)
        {
            throw Error(
                ErrorCode::InvalidArgument,
                "edge (" + std::to_string(i + 1) + ", " + std::to_string(j + 1)
                    + ") out of range for n = " + std::to_string(n));
        }
        if (i == j)
        {
            throw Error(
                ErrorCode::InvalidArgument,
                "self-loop on node " + std::to_string(i + 1));
        }
        const auto a = static_cast<Eigen::Index>(i);
        const auto b = static_cast<Eigen::Index>(j);
        adj(a, b) = 1.0;
        adj(b, a) = 1.0;
    }
    return CommGraph(std::move(adj));
}

CommGraph CommGraph::cycle(std::size_t n)
{
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    if (n == 2)
    {
        edges.emplace_back(0, 1);
    }
    else if (n > 2)
    {
        for (std::size_t i = 0; i < n; ++i)
        {
            edges.emplace_back(i, (i + 1) % n);
        }
    }
    return from_edges(n, edges);
}

CommGraph CommGraph::path(std::size_t n)
{
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i + 1 < n; ++i)
    {
        edges.emplace_back(i, i + 1);
    }
    return from_edges(n, edges);
}

CommGraph CommGraph::complete(std::size_t n)
{
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i)
    {
        for (std::size_t j = i + 1; j < n; ++j)
        {
            edges.emplace_back(i, j);
        }
    }
    return from_edges(n, edges);
}

CommGraph CommGraph::star(std::size_t n)
{
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 1; i < n; ++i)
    {
        edges.emplace_back(0, i);
    }
    return from_edges(n, edges);
}

CommGraph CommGraph::preset(std::string_view name, std::size_t n)
{
    if (name == "cycle")
    {
        return cycle(n);
    }
    if (name == "path")
    {
        return path(n);
    }
    if (name == "complete")
    {
        return complete(n);
    }
    if (name == "star")
    {
        return star(n);
    }
    throw Error(
        ErrorCode::InvalidArgument,
        "unknown graph preset '" + std::string(name)
            + "' (expected cycle, path, complete or star)");
}

Eigen::MatrixXd laplacian(const CommGraph& g)
{
    const Eigen::MatrixXd& adj = g.adjacency();
    Eigen::MatrixXd lap = -adj;
    lap.diagonal() = adj.rowwise().sum();
    return lap;
}

bool is_connected(const CommGraph& g)
{
    const std::size_t n = g.size();
    std::vector<bool> seen(n, false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!queue.empty())
    {
        const std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t v = 0; v < n; ++v)
        {
            if (!seen[v] && g.has_edge(u, v))
            {
                seen[v] = true;
                ++reached;
                queue.push_back(v);
            }
        }
    }
    return reached == n;
}

Eigen::MatrixXd estimation_matrix(const CommGraph& g)
{
    const auto n = static_cast<Eigen::Index>(g.size());
    const Eigen::MatrixXd lap = laplacian(g);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n * n, n * n);
    for (Eigen::Index i = 0; i < n; ++i)
    {
        for (Eigen::Index k = 0; k < n; ++k)
        {
            if (lap(i, k) != 0.0)
            {
                m.block(i * n, k * n, n, n).diagonal().setConstant(lap(i, k));
            }
        }
    }
    for (Eigen::Index i = 0; i < n; ++i)
    {
        for (Eigen::Index j = 0; j < n; ++j)
        {
            m(i * n + j, i * n + j) += g.adjacency()(i, j);
        }
    }
    return m;
}

}  // namespace nashseek
