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

#include "nashseek/analysis.hpp"

#include "nashseek/error.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

namespace nashseek
{

Eigen::MatrixXd numeric_B(const Game& game, std::span<const double> x, double step)
{
    if (!(step > 0.0))
    {
        throw Error(ErrorCode::InvalidArgument, "finite-difference step must be > 0");
    }
    const std::size_t n = game.size();
    if (x.size() != n)
    {
        throw Error(ErrorCode::DimensionMismatch, "point dimension must equal player count");
    }
    const auto ni = static_cast<Eigen::Index>(n);
    Eigen::MatrixXd B(ni, ni);
    std::vector<double> z(x.begin(), x.end());
    for (std::size_t j = 0; j < n; ++j)
    {
        const double xj = z[j];
        for (std::size_t i = 0; i < n; ++i)
        {
            z[j] = xj + step;
            const double up = game.grad(i, z);
            z[j] = xj - step;
            const double down = game.grad(i, z);
            z[j] = xj;
            B(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                (up - down) / (2.0 * step);
        }
    }
    return B;
}

StationarityCheck check_assumption3(
    const Game& game,
    std::span<const double> x,
    double tol,
    double step)
{
    if (!(tol > 0.0))
    {
        throw Error(ErrorCode::InvalidArgument, "tolerance must be > 0");
    }
    StationarityCheck out;
    out.stationary = pseudogradient(game, x).cwiseAbs().maxCoeff() <= tol;
    out.own_concave = (numeric_B(game, x, step).diagonal().array() < -tol).all();
    return out;
}

bool is_strictly_diag_dominant(const Eigen::MatrixXd& m)
{
    if (m.rows() != m.cols())
    {
        throw Error(ErrorCode::DimensionMismatch, "matrix must be square");
    }
    for (Eigen::Index i = 0; i < m.rows(); ++i)
    {
        const double diag = std::abs(m(i, i));
        const double off = m.row(i).cwiseAbs().sum() - diag;
        if (!(diag > off))
        {
            return false;
        }
    }
    return true;
}

double max_real_eigenvalue(const Eigen::MatrixXd& m)
{
    if (m.rows() != m.cols())
    {
        throw Error(ErrorCode::DimensionMismatch, "matrix must be square");
    }
    if (m.size() == 0)
    {
        return -std::numeric_limits<double>::infinity();
    }
    if (m.isApprox(m.transpose()))
    {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
        return es.eigenvalues().maxCoeff();
    }
    Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
    return es.eigenvalues().real().maxCoeff();
}

bool is_hurwitz(const Eigen::MatrixXd& m, double margin)
{
    if (!(margin >= 0.0))
    {
        throw Error(ErrorCode::InvalidArgument, "margin must be >= 0");
    }
    return max_real_eigenvalue(m) < -margin;
}

AssumptionReport assess_candidate(
    const Game& game,
    std::span<const double> x,
    double tol,
    double step)
{
    if (!(tol > 0.0))
    {
        throw Error(ErrorCode::InvalidArgument, "tolerance must be > 0");
    }
    AssumptionReport r;
    r.point = Eigen::Map<const Eigen::VectorXd>(x.data(), static_cast<Eigen::Index>(x.size()));
    r.stationarity_residual = pseudogradient(game, x).cwiseAbs().maxCoeff();
    r.stationary = r.stationarity_residual <= tol;
    r.B = numeric_B(game, x, step);
    r.own_hessian = r.B.diagonal();
    r.own_hessian_negative = (r.own_hessian.array() < -tol).all();
    r.B_diag_dominant = is_strictly_diag_dominant(r.B);
    r.B_max_real_eig = max_real_eigenvalue(r.B);
    r.B_hurwitz = r.B_max_real_eig < 0.0;
    return r;
}

Box Box::cube(std::size_t n, double lo, double hi)
{
    const auto ni = static_cast<Eigen::Index>(n);
    return {Eigen::VectorXd::Constant(ni, lo), Eigen::VectorXd::Constant(ni, hi)};
}

MonotonicityEstimate estimate_monotonicity(
    const Game& game,
    const Box& box,
    std::size_t n_samples,
    std::uint64_t seed)
{
    const auto ni = static_cast<Eigen::Index>(game.size());
    if (n_samples < 2)
    {
        throw Error(ErrorCode::InvalidArgument, "need at least 2 sample pairs");
    }
    if (box.lo.size() != ni || box.hi.size() != ni)
    {
        throw Error(ErrorCode::DimensionMismatch, "box dimension must equal player count");
    }
    if (!(box.lo.array() <= box.hi.array()).all() || !(box.lo.array() < box.hi.array()).any())
    {
        throw Error(ErrorCode::InvalidArgument, "box must be nonempty with lo <= hi");
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto draw = [&] {
        Eigen::VectorXd p(ni);
        for (Eigen::Index k = 0; k < ni; ++k)
        {
            p(k) = box.lo(k) + (box.hi(k) - box.lo(k)) * unit(rng);
        }
        return p;
    };

    MonotonicityEstimate est;
    est.samples = n_samples;
    est.seed = seed;
    est.m_hat = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < n_samples; ++s)
    {
        const Eigen::VectorXd x = draw();
        const Eigen::VectorXd z = draw();
        const Eigen::VectorXd diff = x - z;
        const double sq = diff.squaredNorm();
        if (sq == 0.0)
        {
            continue;
        }
        const Eigen::VectorXd dg = pseudogradient(game, as_span(x)) - pseudogradient(game, as_span(z));
        const double m = -diff.dot(dg) / sq;
        if (m < est.m_hat)
        {
            est.m_hat = m;
            est.worst_x = x;
            est.worst_z = z;
        }
    }
    est.violated = !(est.m_hat > 0.0);
    return est;
}

}  // namespace nashseek
