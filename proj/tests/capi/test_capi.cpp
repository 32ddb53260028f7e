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


// Exercises the shared library strictly through its C header.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nashseek/nashseek.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

namespace
{

double neg_square(void*, size_t i, const double* z, size_t)
{
    return -(z[i] - 1.0) * (z[i] - 1.0);
}

double neg_square_grad(void* user, size_t i, const double* z, size_t)
{
    ++*static_cast<int*>(user);
    return -2.0 * (z[i] - 1.0);
}

}  // namespace

TEST_CASE("version and status names")
{
    CHECK(std::string(nashseek_version()) == "1.0.0");
    CHECK(std::string(nashseek_status_name(NASHSEEK_ERR_NOT_HURWITZ)) == "NotHurwitz");
    CHECK(std::string(nashseek_status_name(12345)) == "Internal");
}

TEST_CASE("null arguments are rejected with a message")
{
    nashseek_graph* g = nullptr;
    CHECK(nashseek_graph_preset(nullptr, 5, &g) == NASHSEEK_ERR_INVALID_ARGUMENT);
    CHECK(std::strlen(nashseek_last_error()) > 0);
    CHECK(nashseek_graph_preset("cycle", 5, nullptr) == NASHSEEK_ERR_INVALID_ARGUMENT);
    nashseek_graph_destroy(nullptr);
    nashseek_game_destroy(nullptr);
    nashseek_trajectory_destroy(nullptr);
}

TEST_CASE("graphs")
{
    nashseek_graph* g = nullptr;
    const size_t edges[] = {1, 2, 2, 3};
    REQUIRE(nashseek_graph_from_edges(3, edges, 2, &g) == NASHSEEK_OK);
    CHECK(nashseek_graph_size(g) == 3);
    int connected = 0;
    CHECK(nashseek_graph_is_connected(g, &connected) == NASHSEEK_OK);
    CHECK(connected == 1);
    double L[9];
    CHECK(nashseek_graph_laplacian(g, L) == NASHSEEK_OK);
    CHECK(L[0] == 1.0);
    CHECK(L[4] == 2.0);
    CHECK(L[2] == 0.0);
    std::vector<double> M(81);
    CHECK(nashseek_graph_estimation_matrix(g, M.data()) == NASHSEEK_OK);
    CHECK(M[1 * 9 + 1] == 2.0);  // y_12: degree 1 plus a_12 = 1
    nashseek_graph_destroy(g);

    const size_t zero_based[] = {0, 1};
    CHECK(nashseek_graph_from_edges(3, zero_based, 1, &g) == NASHSEEK_ERR_INVALID_ARGUMENT);
    const double asym[] = {0, 1, 0, 0};
    CHECK(nashseek_graph_from_adjacency(2, asym, &g) == NASHSEEK_ERR_INVALID_ARGUMENT);
    CHECK(nashseek_graph_preset("hypercube", 4, &g) == NASHSEEK_ERR_INVALID_ARGUMENT);
}

TEST_CASE("games and equilibria")
{
    nashseek_game* game = nullptr;
    REQUIRE(nashseek_game_builtin("example3", &game) == NASHSEEK_OK);
    CHECK(nashseek_game_size(game) == 5);
    CHECK(nashseek_game_is_quadratic(game) == 1);
    double x[5], residual = -1.0;
    CHECK(nashseek_game_quadratic_nash(game, x, &residual) == NASHSEEK_OK);
    CHECK(x[0] == doctest::Approx(2.0147).epsilon(1e-4));
    CHECK(residual < 1e-10);
    double G[5];
    CHECK(nashseek_game_pseudogradient(game, x, G) == NASHSEEK_OK);
    CHECK(std::abs(G[4]) < 1e-10);
    nashseek_game_destroy(game);

    REQUIRE(nashseek_game_builtin("example1", &game) == NASHSEEK_OK);
    CHECK(nashseek_game_is_quadratic(game) == 0);
    CHECK(nashseek_game_quadratic_nash(game, x, nullptr) == NASHSEEK_ERR_NOT_QUADRATIC);
    nashseek_game_destroy(game);

    // 2 players, H = [[-2, 1], [1, -2]], v = [1, 1]
    const double h[] = {-2, 1, 1, 0, 0, 1, 1, -2};
    const double v[] = {1, 0, 0, 1};
    REQUIRE(nashseek_game_quadratic(2, h, v, nullptr, &game) == NASHSEEK_OK);
    CHECK(nashseek_game_quadratic_nash(game, x, nullptr) == NASHSEEK_OK);
    CHECK(x[0] == doctest::Approx(1.0));
    CHECK(x[1] == doctest::Approx(1.0));
    nashseek_game_destroy(game);

    const double singular[] = {-1, 1, 1, 0, 0, 1, 1, -1};
    REQUIRE(nashseek_game_quadratic(2, singular, v, nullptr, &game) == NASHSEEK_OK);
    CHECK(nashseek_game_quadratic_nash(game, x, nullptr) == NASHSEEK_ERR_SINGULAR_MATRIX);
    nashseek_game_destroy(game);

    CHECK(nashseek_game_builtin("example9", &game) == NASHSEEK_ERR_INVALID_ARGUMENT);
    const double m_bad[] = {1, 1, -1, 1, 1};
    CHECK(nashseek_game_example2(m_bad, nullptr, &game) == NASHSEEK_ERR_INVALID_ARGUMENT);
}

TEST_CASE("callback games run through the dynamics")
{
    int calls = 0;
    nashseek_game* game = nullptr;
    REQUIRE(nashseek_game_callback(3, neg_square, neg_square_grad, &calls, &game) == NASHSEEK_OK);
    const double pt[] = {0.0, 2.0, 1.0};
    double err = 1.0;
    CHECK(nashseek_game_grad_check(game, pt, 1e-5, &err) == NASHSEEK_OK);
    CHECK(err < 1e-8);

    nashseek_graph* graph = nullptr;
    REQUIRE(nashseek_graph_preset("complete", 3, &graph) == NASHSEEK_OK);
    nashseek_params p;
    nashseek_params_default(&p);
    p.delta = 0.2;
    p.t_end = 60.0;
    const double x0[] = {5.0, -5.0, 0.0};
    const double xs[] = {1.0, 1.0, 1.0};
    nashseek_trajectory* traj = nullptr;
    REQUIRE(nashseek_integrate(game, graph, &p, x0, nullptr, xs, &traj) == NASHSEEK_OK);
    CHECK(calls > 0);
    double xf[3];
    CHECK(nashseek_trajectory_final(traj, xf, nullptr, nullptr) == NASHSEEK_OK);
    for (double v : xf)
    {
        CHECK(v == doctest::Approx(1.0).epsilon(1e-6));
    }
    nashseek_rate_fit fit{};
    CHECK(nashseek_trajectory_fit_rate(traj, 0.2, 0.8, &fit) == NASHSEEK_OK);
    CHECK(fit.rate > 0.0);
    nashseek_trajectory_destroy(traj);
    nashseek_graph_destroy(graph);
    nashseek_game_destroy(game);
}

TEST_CASE("analysis entry points")
{
    nashseek_game* game = nullptr;
    REQUIRE(nashseek_game_builtin("example1", &game) == NASHSEEK_OK);
    const double other[] = {-1.0, 1.0, 19.0 / 72.0, 1.0 / 9.0, -1.0 / 18.0};
    nashseek_assumption_report r{};
    double own[5];
    CHECK(nashseek_assess_candidate(game, other, 1e-6, 1e-4, &r, nullptr, own) == NASHSEEK_OK);
    CHECK(r.stationary == 1);
    CHECK(r.own_hessian_negative == 0);
    CHECK(r.passed == 0);
    CHECK(own[0] == doctest::Approx(6.0).epsilon(1e-6));

    const double lo[] = {-10, -10, -10, -10, -10};
    const double hi[] = {10, 10, 10, 10, 10};
    nashseek_monotonicity m{};
    CHECK(nashseek_estimate_monotonicity(game, lo, hi, 200, 3, &m, nullptr, nullptr) == NASHSEEK_OK);
    CHECK(m.violated == 1);
    CHECK(m.samples == 200);
    nashseek_game_destroy(game);

    const double dom[] = {-3, 1, 2, -4};
    int flag = 0;
    CHECK(nashseek_is_strictly_diag_dominant(2, dom, &flag) == NASHSEEK_OK);
    CHECK(flag == 1);
    CHECK(nashseek_is_hurwitz(2, dom, 0.0, &flag) == NASHSEEK_OK);
    CHECK(flag == 1);
    double eig = 0.0;
    CHECK(nashseek_max_real_eigenvalue(2, dom, &eig) == NASHSEEK_OK);
    CHECK(eig < 0.0);

    const double M[] = {2, 0, 0, 4};
    const double Q[] = {1, 0, 0, 1};
    double P[4];
    CHECK(nashseek_solve_lyapunov(2, M, Q, P) == NASHSEEK_OK);
    CHECK(P[0] == doctest::Approx(0.25));
    CHECK(P[3] == doctest::Approx(0.125));
    const double unstable[] = {-1, 0, 0, 1};
    CHECK(nashseek_solve_lyapunov(2, unstable, Q, P) == NASHSEEK_ERR_NOT_HURWITZ);
}

TEST_CASE("rate fitting")
{
    const double t[] = {0, 1, 2, 3, 4};
    double e[5];
    for (int k = 0; k < 5; ++k)
    {
        e[k] = std::exp(-0.5 * t[k]);
    }
    nashseek_rate_fit fit{};
    CHECK(nashseek_fit_rate(t, e, 5, 0.0, 1.0, &fit) == NASHSEEK_OK);
    CHECK(fit.rate == doctest::Approx(0.5));
    CHECK(fit.points == 5);
    e[2] = -1.0;
    CHECK(nashseek_fit_rate(t, e, 5, 0.0, 1.0, &fit) == NASHSEEK_ERR_NONPOSITIVE_ERROR);
    CHECK(nashseek_fit_rate(t, e, 5, 0.5, 0.55, &fit) == NASHSEEK_ERR_EMPTY_WINDOW);
    CHECK(nashseek_fit_rate_csv("/nonexistent.csv", 0.2, 0.8, &fit) == NASHSEEK_ERR_IO);
}

TEST_CASE("trajectories, CSV and divergence")
{
    nashseek_game* game = nullptr;
    nashseek_graph* graph = nullptr;
    REQUIRE(nashseek_game_builtin("example3", &game) == NASHSEEK_OK);
    REQUIRE(nashseek_graph_preset("cycle", 5, &graph) == NASHSEEK_OK);
    nashseek_params p;
    nashseek_params_default(&p);
    p.delta = 0.02;
    p.t_end = 2.0;
    p.record_every = 100;
    const double x0[] = {-10, -10, -10, -10, -10};
    double xs[5];
    REQUIRE(nashseek_game_quadratic_nash(game, xs, nullptr) == NASHSEEK_OK);

    double dx[5], dy[25];
    std::vector<double> y0(25);
    for (int k = 0; k < 25; ++k)
    {
        y0[k] = xs[k % 5];
    }
    CHECK(nashseek_rhs(game, graph, &p, xs, y0.data(), dx, dy) == NASHSEEK_OK);
    for (double v : dy)
    {
        CHECK(v == 0.0);
    }

    nashseek_trajectory* traj = nullptr;
    REQUIRE(nashseek_integrate(game, graph, &p, x0, nullptr, xs, &traj) == NASHSEEK_OK);
    CHECK(nashseek_trajectory_samples(traj) == 21);
    CHECK(nashseek_trajectory_dim(traj) == 5);
    CHECK(nashseek_trajectory_has_reference(traj) == 1);
    CHECK(nashseek_trajectory_graph_connected(traj) == 1);
    double t = -1.0, x[5], y[25], err = 0.0, resid = -1.0;
    CHECK(nashseek_trajectory_sample(traj, 0, &t, x, y, &err, &resid) == NASHSEEK_OK);
    CHECK(t == 0.0);
    CHECK(x[0] == -10.0);
    CHECK(y[7] == -10.0);
    CHECK(resid == 0.0);
    CHECK(nashseek_trajectory_sample(traj, 21, &t, nullptr, nullptr, nullptr, nullptr)
          == NASHSEEK_ERR_INVALID_ARGUMENT);

    nashseek_lyapunov_summary ly{};
    CHECK(nashseek_trajectory_lyapunov(traj, graph, &p, 0.5, nullptr, xs, 0.05, &ly) == NASHSEEK_OK);
    CHECK(ly.samples == 21);
    CHECK(ly.v_final < ly.v_initial);

    char path[] = "/tmp/nashseek_capi_XXXXXX";
    const int fd = mkstemp(path);
    REQUIRE(fd >= 0);
    CHECK(nashseek_trajectory_write_csv(traj, path, 0) == NASHSEEK_OK);
    nashseek_rate_fit fit{};
    CHECK(nashseek_fit_rate_csv(path, 0.2, 0.8, &fit) == NASHSEEK_OK);
    nashseek_rate_fit direct{};
    CHECK(nashseek_trajectory_fit_rate(traj, 0.2, 0.8, &direct) == NASHSEEK_OK);
    CHECK(fit.rate == direct.rate);
    std::remove(path);
    nashseek_trajectory_destroy(traj);
    nashseek_game_destroy(game);

    REQUIRE(nashseek_game_builtin("example1", &game) == NASHSEEK_OK);
    p.delta = 100.0;
    p.t_end = 10.0;
    const double x1[] = {1, 2, 0, 0, 0};
    traj = nullptr;
    CHECK(nashseek_integrate(game, graph, &p, x1, nullptr, nullptr, &traj) == NASHSEEK_ERR_DIVERGED);
    CHECK(traj == nullptr);
    double when = 0.0, where[5];
    CHECK(nashseek_last_divergence(&when, where, 5) == NASHSEEK_OK);
    CHECK(when > 0.0);
    nashseek_game_destroy(game);
    nashseek_graph_destroy(graph);
}
