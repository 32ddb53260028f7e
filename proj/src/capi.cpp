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

#include "nashseek/nashseek.h"

#include "nashseek/analysis.hpp"
#include "nashseek/dynamics.hpp"
#include "nashseek/error.hpp"
#include "nashseek/games.hpp"
#include "nashseek/graph.hpp"
#include "nashseek/trajectory_io.hpp"

#include <cmath>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <utility>
#include <vector>

struct nashseek_graph
{
    nashseek::CommGraph graph;
};

struct nashseek_game
{
    std::shared_ptr<const nashseek::Game> game;
    std::string name;
};

struct nashseek_trajectory
{
    nashseek::Trajectory traj;
};

namespace
{

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

thread_local std::string g_last_error;
thread_local double g_divergence_time = 0.0;
thread_local Eigen::VectorXd g_divergence_x;

int status_of(nashseek::ErrorCode code)
{
    switch (code)
    {
        case nashseek::ErrorCode::InvalidArgument:
            return NASHSEEK_ERR_INVALID_ARGUMENT;
        case nashseek::ErrorCode::DimensionMismatch:
            return NASHSEEK_ERR_DIMENSION_MISMATCH;
        case nashseek::ErrorCode::SingularMatrix:
            return NASHSEEK_ERR_SINGULAR_MATRIX;
        case nashseek::ErrorCode::NotHurwitz:
            return NASHSEEK_ERR_NOT_HURWITZ;
        case nashseek::ErrorCode::Diverged:
            return NASHSEEK_ERR_DIVERGED;
        case nashseek::ErrorCode::EmptyWindow:
            return NASHSEEK_ERR_EMPTY_WINDOW;
        case nashseek::ErrorCode::NonpositiveError:
            return NASHSEEK_ERR_NONPOSITIVE_ERROR;
        case nashseek::ErrorCode::NotQuadratic:
            return NASHSEEK_ERR_NOT_QUADRATIC;
        case nashseek::ErrorCode::Io:
            return NASHSEEK_ERR_IO;
    }
    return NASHSEEK_ERR_INTERNAL;
}

template <class F>
int guarded(F&& body) noexcept
{
    try
    {
        body();
        return NASHSEEK_OK;
    }
    catch (const nashseek::DivergedError& e)
    {
        g_last_error = e.what();
        g_divergence_time = e.time();
        g_divergence_x = e.state().x;
        return NASHSEEK_ERR_DIVERGED;
    }
    catch (const nashseek::Error& e)
    {
        g_last_error = e.what();
        return status_of(e.code());
    }
    catch (const std::bad_alloc&)
    {
        g_last_error = "out of memory";
        return NASHSEEK_ERR_INTERNAL;
    }
    catch (const std::exception& e)
    {
        g_last_error = e.what();
        return NASHSEEK_ERR_INTERNAL;
    }
    catch (...)
    {
        g_last_error = "unknown error";
        return NASHSEEK_ERR_INTERNAL;
    }
}

template <class T>
void require_ptr(const T* p, const char* what)
{
    if (p == nullptr)
    {
        throw nashseek::Error(
            nashseek::ErrorCode::InvalidArgument, std::string(what) + " must not be NULL");
    }
}

Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }

Eigen::VectorXd read_vector(const double* p, std::size_t n)
{
    return Eigen::Map<const Eigen::VectorXd>(p, idx(n));
}

Eigen::MatrixXd read_matrix(const double* p, std::size_t rows, std::size_t cols)
{
    return Eigen::Map<const RowMatrix>(p, idx(rows), idx(cols));
}

void write_vector(const Eigen::VectorXd& v, double* out)
{
    Eigen::Map<Eigen::VectorXd>(out, v.size()) = v;
}

void write_matrix(const Eigen::MatrixXd& m, double* out)
{
    Eigen::Map<RowMatrix>(out, m.rows(), m.cols()) = m;
}

nashseek::SeekerParams to_params(const nashseek_params* p, std::size_t n)
{
    require_ptr(p, "params");
    nashseek::SeekerParams out;
    out.delta = p->delta;
    out.dt = p->dt;
    out.t_end = p->t_end;
    out.record_every = p->record_every;
    if (p->kbar != nullptr)
    {
        out.kbar = read_vector(p->kbar, n);
    }
    if (p->gains != nullptr)
    {
        out.gains = read_matrix(p->gains, n, n);
    }
    return out;
}

void fill_rate(const nashseek::RateFit& fit, nashseek_rate_fit* out)
{
    out->rate = fit.rate;
    out->intercept = fit.intercept;
    out->r_squared = fit.r_squared;
    out->points = fit.points;
}

template <class Handle, class... Args>
Handle* make_handle(Args&&... args)
{
    return new Handle{std::forward<Args>(args)...};
}

}  // namespace

extern "C" {

const char* nashseek_version(void) { return "1.0.0"; }

const char* nashseek_last_error(void) { return g_last_error.c_str(); }

const char* nashseek_status_name(int status)
{
    switch (status)
    {
        case NASHSEEK_OK:
            return "OK";
        case NASHSEEK_ERR_INVALID_ARGUMENT:
            return "InvalidArgument";
        case NASHSEEK_ERR_DIMENSION_MISMATCH:
            return "DimensionMismatch";
        case NASHSEEK_ERR_SINGULAR_MATRIX:
            return "SingularMatrix";
        case NASHSEEK_ERR_NOT_HURWITZ:
            return "NotHurwitz";
        case NASHSEEK_ERR_DIVERGED:
            return "Diverged";
        case NASHSEEK_ERR_EMPTY_WINDOW:
            return "EmptyWindow";
        case NASHSEEK_ERR_NONPOSITIVE_ERROR:
            return "NonpositiveError";
        case NASHSEEK_ERR_NOT_QUADRATIC:
            return "NotQuadratic";
        case NASHSEEK_ERR_IO:
            return "Io";
        default:
            return "Internal";
    }
}

/* ---- graph ---- */

int nashseek_graph_preset(const char* name, size_t n, nashseek_graph** out)
{
    return guarded([&] {
        require_ptr(name, "name");
        require_ptr(out, "out");
        *out = make_handle<nashseek_graph>(nashseek::CommGraph::preset(name, n));
    });
}

int nashseek_graph_from_edges(size_t n, const size_t* edges, size_t edge_count, nashseek_graph** out)
{
    return guarded([&] {
        require_ptr(out, "out");
        if (edge_count > 0)
        {
            require_ptr(edges, "edges");
        }
        std::vector<std::pair<std::size_t, std::size_t>> list;
        list.reserve(edge_count);
        for (size_t e = 0; e < edge_count; ++e)
        {
            const size_t a = edges[2 * e];
            const size_t b = edges[2 * e + 1];
            if (a == 0 || b == 0)
            {
                throw nashseek::Error(
                    nashseek::ErrorCode::InvalidArgument, "edge endpoints are 1-based");
            }
            list.emplace_back(a - 1, b - 1);
        }
        *out = make_handle<nashseek_graph>(nashseek::CommGraph::from_edges(n, list));
    });
}

int nashseek_graph_from_adjacency(size_t n, const double* adj, nashseek_graph** out)
{
    return guarded([&] {
        require_ptr(adj, "adj");
        require_ptr(out, "out");
        *out = make_handle<nashseek_graph>(
            nashseek::CommGraph::from_adjacency(read_matrix(adj, n, n)));
    });
}

void nashseek_graph_destroy(nashseek_graph* graph) { delete graph; }

size_t nashseek_graph_size(const nashseek_graph* graph)
{
    return graph ? graph->graph.size() : 0;
}

int nashseek_graph_is_connected(const nashseek_graph* graph, int* out)
{
    return guarded([&] {
        require_ptr(graph, "graph");
        require_ptr(out, "out");
        *out = nashseek::is_connected(graph->graph) ? 1 : 0;
    });
}

int nashseek_graph_laplacian(const nashseek_graph* graph, double* out)
{
    return guarded([&] {
        require_ptr(graph, "graph");
        require_ptr(out, "out");
        write_matrix(nashseek::laplacian(graph->graph), out);
    });
}

int nashseek_graph_estimation_matrix(const nashseek_graph* graph, double* out)
{
    return guarded([&] {
        require_ptr(graph, "graph");
        require_ptr(out, "out");
        write_matrix(nashseek::estimation_matrix(graph->graph), out);
    });
}

/* ---- games ---- */

int nashseek_game_builtin(const char* name, nashseek_game** out)
{
    return guarded([&] {
        require_ptr(name, "name");
        require_ptr(out, "out");
        auto game = nashseek::make_builtin(name);
        *out = make_handle<nashseek_game>(game, game->name());
    });
}

int nashseek_game_example2(const double* m, const double* d, nashseek_game** out)
{
    return guarded([&] {
        require_ptr(out, "out");
        nashseek::Example2Params p;
        if (m != nullptr)
        {
            p.m.assign(m, m + 5);
        }
        if (d != nullptr)
        {
            p.d.assign(d, d + 5);
        }
        auto game = nashseek::make_example2(p);
        *out = make_handle<nashseek_game>(game, game->name());
    });
}

int nashseek_game_example3(
    size_t n,
    const double* rho,
    double p0,
    double q0,
    const double* x_desired,
    nashseek_game** out)
{
    return guarded([&] {
        require_ptr(rho, "rho");
        require_ptr(x_desired, "x_desired");
        require_ptr(out, "out");
        nashseek::Example3Params p;
        p.rho.assign(rho, rho + n);
        p.x_desired.assign(x_desired, x_desired + n);
        p.p0 = p0;
        p.q0 = q0;
        std::shared_ptr<const nashseek::Game> game = nashseek::make_example3(p);
        *out = make_handle<nashseek_game>(game, game->name());
    });
}

int nashseek_game_quadratic(
    size_t n, const double* h, const double* v, const double* g, nashseek_game** out)
{
    return guarded([&] {
        require_ptr(h, "h");
        require_ptr(v, "v");
        require_ptr(out, "out");
        std::vector<Eigen::MatrixXd> hs;
        hs.reserve(n);
        for (size_t i = 0; i < n; ++i)
        {
            hs.push_back(read_matrix(h + i * n * n, n, n));
        }
        Eigen::VectorXd gv =
            g != nullptr ? read_vector(g, n) : Eigen::VectorXd::Zero(idx(n));
        std::shared_ptr<const nashseek::Game> game = std::make_shared<nashseek::QuadraticGame>(
            std::move(hs), read_matrix(v, n, n), std::move(gv));
        *out = make_handle<nashseek_game>(game, game->name());
    });
}

int nashseek_game_callback(
    size_t n,
    nashseek_player_fn payoff,
    nashseek_player_fn grad,
    void* user,
    nashseek_game** out)
{
    return guarded([&] {
        require_ptr(out, "out");
        if (payoff == nullptr || grad == nullptr)
        {
            throw nashseek::Error(
                nashseek::ErrorCode::InvalidArgument, "payoff and grad callbacks are required");
        }
        auto wrap = [user](nashseek_player_fn fn) {
            return [fn, user](std::size_t i, std::span<const double> z) {
                return fn(user, i, z.data(), z.size());
            };
        };
        std::shared_ptr<const nashseek::Game> game =
            std::make_shared<nashseek::FunctionGame>(n, wrap(payoff), wrap(grad));
        *out = make_handle<nashseek_game>(game, game->name());
    });
}

void nashseek_game_destroy(nashseek_game* game) { delete game; }

size_t nashseek_game_size(const nashseek_game* game)
{
    return game ? game->game->size() : 0;
}

const char* nashseek_game_name(const nashseek_game* game)
{
    return game ? game->name.c_str() : "";
}

int nashseek_game_is_quadratic(const nashseek_game* game)
{
    return game && dynamic_cast<const nashseek::QuadraticGame*>(game->game.get()) ? 1 : 0;
}

int nashseek_game_payoff(const nashseek_game* game, size_t player, const double* z, double* out)
{
    return guarded([&] {
        require_ptr(game, "game");
        require_ptr(z, "z");
        require_ptr(out, "out");
        *out = game->game->payoff(player, {z, game->game->size()});
    });
}

int nashseek_game_pseudogradient(const nashseek_game* game, const double* x, double* out)
{
    return guarded([&] {
        require_ptr(game, "game");
        require_ptr(x, "x");
        require_ptr(out, "out");
        write_vector(nashseek::pseudogradient(*game->game, {x, game->game->size()}), out);
    });
}

int nashseek_game_grad_check(const nashseek_game* game, const double* x, double step, double* out)
{
    return guarded([&] {
        require_ptr(game, "game");
        require_ptr(x, "x");
        require_ptr(out, "out");
        *out = nashseek::grad_check(*game->game, {x, game->game->size()}, step);
    });
}

int nashseek_game_quadratic_nash(const nashseek_game* game, double* x_out, double* residual_out)
{
    return guarded([&] {
        require_ptr(game, "game");
        require_ptr(x_out, "x_out");
        const auto* qg = dynamic_cast<const nashseek::QuadraticGame*>(game->game.get());
        if (qg == nullptr)
        {
            throw nashseek::Error(
                nashseek::ErrorCode::NotQuadratic,
                "game '" + game->name + "' is not quadratic; no closed-form equilibrium");
        }
        const auto cand = nashseek::make_candidate(*qg, nashseek::quadratic_nash(*qg));
        write_vector(cand.x_star, x_out);
        if (residual_out != nullptr)
        {
            *residual_out = cand.stationarity_residual;
        }
    });
}

/* ---- analysis ---- */

int nashseek_numeric_b(const nashseek_game* game, const double* x, double step, double* out)
{
    return guarded([&] {
        require_ptr(game, "game");
        require_ptr(x, "x");
        require_ptr(out, "out");
        write_matrix(nashseek::numeric_B(*game->game, {x, game->game->size()}, step), out);
    });
}

int nashseek_assess_candidate(
    const nashseek_game* game,
    const double* x,
    double tol,
    double step,
    nashseek_assumption_report* report,
    double* b_out,
    double* own_hessian_out)
{
    return guarded([&] {
        require_ptr(game, "game");
        require_ptr(x, "x");
        require_ptr(report, "report");
        const auto r = nashseek::assess_candidate(*game->game, {x, game->game->size()}, tol, step);
        report->stationary = r.stationary;
        report->stationarity_residual = r.stationarity_residual;
        report->own_hessian_negative = r.own_hessian_negative;
        report->b_diag_dominant = r.B_diag_dominant;
        report->b_hurwitz = r.B_hurwitz;
        report->b_max_real_eig = r.B_max_real_eig;
        report->passed = r.passed();
        if (b_out != nullptr)
        {
            write_matrix(r.B, b_out);
        }
        if (own_hessian_out != nullptr)
        {
            write_vector(r.own_hessian, own_hessian_out);
        }
    });
}

int nashseek_is_strictly_diag_dominant(size_t n, const double* m, int* out)
{
    return guarded([&] {
        require_ptr(m, "m");
        require_ptr(out, "out");
        *out = nashseek::is_strictly_diag_dominant(read_matrix(m, n, n)) ? 1 : 0;
    });
}

int nashseek_is_hurwitz(size_t n, const double* m, double margin, int* out)
{
    return guarded([&] {
        require_ptr(m, "m");
        require_ptr(out, "out");
        *out = nashseek::is_hurwitz(read_matrix(m, n, n), margin) ? 1 : 0;
    });
}

int nashseek_max_real_eigenvalue(size_t n, const double* m, double* out)
{
    return guarded([&] {
        require_ptr(m, "m");
        require_ptr(out, "out");
        *out = nashseek::max_real_eigenvalue(read_matrix(m, n, n));
    });
}

int nashseek_estimate_monotonicity(
    const nashseek_game* game,
    const double* lo,
    const double* hi,
    size_t n_samples,
    uint64_t seed,
    nashseek_monotonicity* out,
    double* worst_x,
    double* worst_z)
{
    return guarded([&] {
        require_ptr(game, "game");
        require_ptr(lo, "lo");
        require_ptr(hi, "hi");
        require_ptr(out, "out");
        const std::size_t n = game->game->size();
        const nashseek::Box box{read_vector(lo, n), read_vector(hi, n)};
        const auto est = nashseek::estimate_monotonicity(*game->game, box, n_samples, seed);
        out->m_hat = est.m_hat;
        out->violated = est.violated;
        out->samples = est.samples;
        out->seed = est.seed;
        if (worst_x != nullptr && est.worst_x.size() != 0)
        {
            write_vector(est.worst_x, worst_x);
        }
        if (worst_z != nullptr && est.worst_z.size() != 0)
        {
            write_vector(est.worst_z, worst_z);
        }
    });
}

int nashseek_solve_lyapunov(size_t k, const double* m, const double* q, double* p_out)
{
    return guarded([&] {
        require_ptr(m, "m");
        require_ptr(q, "q");
        require_ptr(p_out, "p_out");
        write_matrix(nashseek::solve_lyapunov(read_matrix(m, k, k), read_matrix(q, k, k)), p_out);
    });
}

int nashseek_fit_rate(
    const double* times,
    const double* errors,
    size_t count,
    double lo,
    double hi,
    nashseek_rate_fit* out)
{
    return guarded([&] {
        require_ptr(out, "out");
        if (count > 0)
        {
            require_ptr(times, "times");
            require_ptr(errors, "errors");
        }
        fill_rate(
            nashseek::fit_exponential_rate_window({times, count}, {errors, count}, lo, hi), out);
    });
}

int nashseek_fit_rate_csv(const char* path, double lo, double hi, nashseek_rate_fit* out)
{
    return guarded([&] {
        require_ptr(path, "path");
        require_ptr(out, "out");
        const auto series = nashseek::read_error_series(std::string(path));
        fill_rate(
            nashseek::fit_exponential_rate_window(series.times, series.errors, lo, hi), out);
    });
}

/* ---- dynamics ---- */

void nashseek_params_default(nashseek_params* params)
{
    if (params == nullptr)
    {
        return;
    }
    const nashseek::SeekerParams d;
    params->delta = d.delta;
    params->kbar = nullptr;
    params->gains = nullptr;
    params->dt = d.dt;
    params->t_end = d.t_end;
    params->record_every = d.record_every;
}

int nashseek_rhs(
    const nashseek_game* game,
    const nashseek_graph* graph,
    const nashseek_params* params,
    const double* x,
    const double* y,
    double* dx_out,
    double* dy_out)
{
    return guarded([&] {
        require_ptr(game, "game");
        require_ptr(graph, "graph");
        require_ptr(x, "x");
        require_ptr(y, "y");
        require_ptr(dx_out, "dx_out");
        require_ptr(dy_out, "dy_out");
        const std::size_t n = game->game->size();
        nashseek::SeekerState s;
        s.x = read_vector(x, n);
        s.Y = Eigen::Map<const RowMatrix>(y, idx(n), idx(n));
        const auto d = nashseek::rhs(*game->game, graph->graph, to_params(params, n), s);
        write_vector(d.dx, dx_out);
        Eigen::Map<RowMatrix>(dy_out, idx(n), idx(n)) = d.dY;
    });
}

int nashseek_integrate(
    const nashseek_game* game,
    const nashseek_graph* graph,
    const nashseek_params* params,
    const double* x0,
    const double* y0,
    const double* x_star,
    nashseek_trajectory** out)
{
    return guarded([&] {
        require_ptr(game, "game");
        require_ptr(graph, "graph");
        require_ptr(x0, "x0");
        require_ptr(out, "out");
        const std::size_t n = game->game->size();
        std::optional<nashseek::EstimateMatrix> Y0;
        if (y0 != nullptr)
        {
            Y0 = Eigen::Map<const RowMatrix>(y0, idx(n), idx(n));
        }
        std::optional<Eigen::VectorXd> xs;
        if (x_star != nullptr)
        {
            xs = read_vector(x_star, n);
        }
        auto traj = nashseek::integrate(
            *game->game, graph->graph, to_params(params, n), read_vector(x0, n), Y0, xs);
        *out = make_handle<nashseek_trajectory>(std::move(traj));
    });
}

int nashseek_last_divergence(double* time, double* x_out, size_t n)
{
    return guarded([&] {
        if (time != nullptr)
        {
            *time = g_divergence_time;
        }
        if (x_out != nullptr)
        {
            if (static_cast<size_t>(g_divergence_x.size()) != n)
            {
                throw nashseek::Error(
                    nashseek::ErrorCode::DimensionMismatch, "no divergence of that dimension recorded");
            }
            write_vector(g_divergence_x, x_out);
        }
    });
}

void nashseek_trajectory_destroy(nashseek_trajectory* traj) { delete traj; }

size_t nashseek_trajectory_samples(const nashseek_trajectory* traj)
{
    return traj ? traj->traj.sample_count() : 0;
}

size_t nashseek_trajectory_dim(const nashseek_trajectory* traj)
{
    return traj ? traj->traj.dimension() : 0;
}

int nashseek_trajectory_has_reference(const nashseek_trajectory* traj)
{
    return traj && traj->traj.x_star ? 1 : 0;
}

int nashseek_trajectory_graph_connected(const nashseek_trajectory* traj)
{
    return traj && traj->traj.graph_connected ? 1 : 0;
}

int nashseek_trajectory_sample(
    const nashseek_trajectory* traj,
    size_t k,
    double* t,
    double* x_out,
    double* y_out,
    double* err,
    double* consensus_residual)
{
    return guarded([&] {
        require_ptr(traj, "traj");
        const auto& tr = traj->traj;
        if (k >= tr.sample_count())
        {
            throw nashseek::Error(nashseek::ErrorCode::InvalidArgument, "sample index out of range");
        }
        if (t != nullptr)
        {
            *t = tr.times[k];
        }
        if (x_out != nullptr)
        {
            write_vector(tr.states[k].x, x_out);
        }
        if (y_out != nullptr)
        {
            const auto& Y = tr.states[k].Y;
            Eigen::Map<RowMatrix>(y_out, Y.rows(), Y.cols()) = Y;
        }
        if (err != nullptr)
        {
            *err = tr.action_error.empty() ? std::nan("") : tr.action_error[k];
        }
        if (consensus_residual != nullptr)
        {
            *consensus_residual = tr.consensus_residual[k];
        }
    });
}

int nashseek_trajectory_final(
    const nashseek_trajectory* traj, double* x_out, double* y_out, double* consensus_residual)
{
    return guarded([&] {
        require_ptr(traj, "traj");
        const auto& s = traj->traj.final_state;
        if (x_out != nullptr)
        {
            write_vector(s.x, x_out);
        }
        if (y_out != nullptr)
        {
            Eigen::Map<RowMatrix>(y_out, s.Y.rows(), s.Y.cols()) = s.Y;
        }
        if (consensus_residual != nullptr)
        {
            *consensus_residual = nashseek::consensus_residual(s);
        }
    });
}

int nashseek_trajectory_write_csv(const nashseek_trajectory* traj, const char* path, int include_estimates)
{
    return guarded([&] {
        require_ptr(traj, "traj");
        require_ptr(path, "path");
        nashseek::write_trajectory_csv(std::string(path), traj->traj, include_estimates != 0);
    });
}

int nashseek_trajectory_fit_rate(
    const nashseek_trajectory* traj, double lo, double hi, nashseek_rate_fit* out)
{
    return guarded([&] {
        require_ptr(traj, "traj");
        require_ptr(out, "out");
        if (!traj->traj.x_star)
        {
            throw nashseek::Error(
                nashseek::ErrorCode::InvalidArgument, "trajectory has no reference equilibrium");
        }
        fill_rate(
            nashseek::fit_exponential_rate_window(
                traj->traj.times, traj->traj.action_error, lo, hi),
            out);
    });
}

int nashseek_trajectory_lyapunov(
    const nashseek_trajectory* traj,
    const nashseek_graph* graph,
    const nashseek_params* params,
    double c,
    const double* q1,
    const double* x_star,
    double burn_in,
    nashseek_lyapunov_summary* out)
{
    return guarded([&] {
        require_ptr(traj, "traj");
        require_ptr(graph, "graph");
        require_ptr(x_star, "x_star");
        require_ptr(out, "out");
        const std::size_t n = traj->traj.dimension();
        std::optional<Eigen::MatrixXd> Q1;
        if (q1 != nullptr)
        {
            Q1 = read_matrix(q1, n * n, n * n);
        }
        const auto mon = nashseek::make_lyapunov_monitor(graph->graph, to_params(params, n), c, Q1);
        const auto series =
            nashseek::lyapunov_along_trajectory(mon, traj->traj, read_vector(x_star, n), burn_in);
        out->decrease_fraction = series.decrease_fraction;
        out->v_initial = series.V.front();
        out->v_final = series.V.back();
        out->burn_in_index = series.burn_in_index;
        out->samples = series.V.size();
    });
}

}  // extern "C"
