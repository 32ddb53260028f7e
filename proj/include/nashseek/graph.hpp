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
#include <string_view>
#include <utility>
#include <vector>

namespace nashseek
{

/// Undirected, unweighted communication graph over n players.
///
/// The adjacency matrix is binary, symmetric and has a zero diagonal; every
/// constructor validates this and throws Error(InvalidArgument) otherwise.
/// Player indices are 0-based here; the edge-list and preset parsers used by
/// the CLI accept 1-based indices.
class CommGraph
{
   public:
    static CommGraph from_adjacency(const Eigen::MatrixXd& adj);

    /// Edges are 0-based (i, j) pairs; duplicates are tolerated.
    static CommGraph from_edges(
        std::size_t n,
        const std::vector<std::pair<std::size_t, std::size_t>>& edges);

    static CommGraph cycle(std::size_t n);
    static CommGraph path(std::size_t n);
    static CommGraph complete(std::size_t n);
    /// Hub is player 0.
    static CommGraph star(std::size_t n);

    /// Named preset: "cycle", "path", "complete" or "star".
    static CommGraph preset(std::string_view name, std::size_t n);

    std::size_t size() const noexcept
    {
        return static_cast<std::size_t>(adj_.rows());
    }
    const Eigen::MatrixXd& adjacency() const noexcept { return adj_; }
    bool has_edge(std::size_t i, std::size_t j) const
    {
        return adj_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))
               != 0.0;
    }

   private:
    explicit CommGraph(Eigen::MatrixXd adj) : adj_(std::move(adj)) {}

    Eigen::MatrixXd adj_;
};

/// L = D - A.
Eigen::MatrixXd laplacian(const CommGraph& g);

bool is_connected(const CommGraph& g);

/// M = L (x) I_n + B0 with B0 = diag(a_11, a_12, ..., a_1n, a_21, ..., a_nn).
///
/// Estimates are stacked player-major: index i*n + j holds player i's
/// estimate of player j's action. This layout is used throughout the library.
Eigen::MatrixXd estimation_matrix(const CommGraph& g);

/// Flat index of estimate y_ij in the stacked estimate vector.
constexpr std::size_t estimate_index(std::size_t n, std::size_t i, std::size_t j)
{
    return i * n + j;
}

}  // namespace nashseek
