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

/*
 * C interface to libnashseek.
 *
 * Conventions:
 *  - Every fallible function returns a nashseek_status; NASHSEEK_OK is 0.
 *    On failure nashseek_last_error() describes the problem. The message is
 *    thread-local and stays valid until the next failing call on the thread.
 *  - Handles are opaque and owned by the caller; release them with the
 *    matching *_destroy function (NULL is accepted).
 *  - Matrices are dense row-major arrays. Estimate matrices Y are n x n with
 *    row i holding player i's estimates; the stacked estimate vector and the
 *    n^2 x n^2 estimation matrix use the same player-major order.
 *  - Player indices are 0-based except in edge lists, which are 1-based to
 *    match the configuration format.
 */

#ifndef NASHSEEK_H
#define NASHSEEK_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(NASHSEEK_BUILDING)
#define NASHSEEK_API __declspec(dllexport)
#else
#define NASHSEEK_API __declspec(dllimport)
#endif
#else
#define NASHSEEK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nashseek_status
{
    NASHSEEK_OK = 0,
    NASHSEEK_ERR_INVALID_ARGUMENT = 1,
    NASHSEEK_ERR_DIMENSION_MISMATCH = 2,
    NASHSEEK_ERR_SINGULAR_MATRIX = 3,
    NASHSEEK_ERR_NOT_HURWITZ = 4,
    NASHSEEK_ERR_DIVERGED = 5,
    NASHSEEK_ERR_EMPTY_WINDOW = 6,
    NASHSEEK_ERR_NONPOSITIVE_ERROR = 7,
    NASHSEEK_ERR_NOT_QUADRATIC = 8,
    NASHSEEK_ERR_IO = 9,
    NASHSEEK_ERR_INTERNAL = 99
} nashseek_status;

typedef struct nashseek_graph nashseek_graph;
typedef struct nashseek_game nashseek_game;
typedef struct nashseek_trajectory nashseek_trajectory;

NASHSEEK_API const char* nashseek_version(void);
NASHSEEK_API const char* nashseek_last_error(void);
NASHSEEK_API const char* nashseek_status_name(int status);

/* ---- communication graph ------------------------------------------------ */

/* name: "cycle", "path", "complete" or "star". */
NASHSEEK_API int nashseek_graph_preset(const char* name, size_t n, nashseek_graph** out);
/* edges: edge_count (i, j) pairs, 1-based. */
NASHSEEK_API int nashseek_graph_from_edges(
    size_t n, const size_t* edges, size_t edge_count, nashseek_graph** out);
/* adj: n x n, entries 0 or 1, symmetric, zero diagonal. */
NASHSEEK_API int nashseek_graph_from_adjacency(size_t n, const double* adj, nashseek_graph** out);
NASHSEEK_API void nashseek_graph_destroy(nashseek_graph* graph);
NASHSEEK_API size_t nashseek_graph_size(const nashseek_graph* graph);
NASHSEEK_API int nashseek_graph_is_connected(const nashseek_graph* graph, int* out);
/* out: n x n. */
NASHSEEK_API int nashseek_graph_laplacian(const nashseek_graph* graph, double* out);
/* out: n^2 x n^2, L (x) I + B0. */
NASHSEEK_API int nashseek_graph_estimation_matrix(const nashseek_graph* graph, double* out);

/* ---- games -------------------------------------------------------------- */

/* Callback signature for custom games: value for `player` at point z. */
typedef double (*nashseek_player_fn)(void* user, size_t player, const double* z, size_t n);

/* name: "example1", "example2" or "example3" with default parameters. */
NASHSEEK_API int nashseek_game_builtin(const char* name, nashseek_game** out);
/* m, d: 5 values each; NULL keeps the defaults. */
NASHSEEK_API int nashseek_game_example2(const double* m, const double* d, nashseek_game** out);
/* rho, x_desired: n values each. */
NASHSEEK_API int nashseek_game_example3(
    size_t n,
    const double* rho,
    double p0,
    double q0,
    const double* x_desired,
    nashseek_game** out);
/* h: n matrices of n x n (h[i*n*n + j*n + k] = h^i_jk); v: n x n
 * (v[i*n + j] = v^i_j); g: n constants (NULL for zeros). */
NASHSEEK_API int nashseek_game_quadratic(
    size_t n, const double* h, const double* v, const double* g, nashseek_game** out);
/* The callbacks must be reentrant; `user` must outlive the game. */
NASHSEEK_API int nashseek_game_callback(
    size_t n,
    nashseek_player_fn payoff,
    nashseek_player_fn grad,
    void* user,
    nashseek_game** out);
NASHSEEK_API void nashseek_game_destroy(nashseek_game* game);
NASHSEEK_API size_t nashseek_game_size(const nashseek_game* game);
NASHSEEK_API const char* nashseek_game_name(const nashseek_game* game);
NASHSEEK_API int nashseek_game_is_quadratic(const nashseek_game* game);
NASHSEEK_API int nashseek_game_payoff(
    const nashseek_game* game, size_t player, const double* z, double* out);
NASHSEEK_API int nashseek_game_pseudogradient(const nashseek_game* game, const double* x, double* out);
NASHSEEK_API int nashseek_game_grad_check(
    const nashseek_game* game, const double* x, double step, double* out);
/* x* = -H^{-1} v. residual_out (nullable) receives max_i |df_i/dx_i (x*)|. */
NASHSEEK_API int nashseek_game_quadratic_nash(
    const nashseek_game* game, double* x_out, double* residual_out);

/* ---- assumption checks -------------------------------------------------- */

typedef struct nashseek_assumption_report
{
    int stationary;
    double stationarity_residual;
    int own_hessian_negative;
    int b_diag_dominant;
    int b_hurwitz;
    double b_max_real_eig;
    int passed;
} nashseek_assumption_report;

typedef struct nashseek_monotonicity
{
    double m_hat;
    int violated;
    size_t samples;
    uint64_t seed;
} nashseek_monotonicity;

/* out: n x n matrix of second partials d^2 f_i / dx_i dx_j. */
NASHSEEK_API int nashseek_numeric_b(
    const nashseek_game* game, const double* x, double step, double* out);
/* b_out (n x n) and own_hessian_out (n) are optional. */
NASHSEEK_API int nashseek_assess_candidate(
    const nashseek_game* game,
    const double* x,
    double tol,
    double step,
    nashseek_assumption_report* report,
    double* b_out,
    double* own_hessian_out);
NASHSEEK_API int nashseek_is_strictly_diag_dominant(size_t n, const double* m, int* out);
NASHSEEK_API int nashseek_is_hurwitz(size_t n, const double* m, double margin, int* out);
NASHSEEK_API int nashseek_max_real_eigenvalue(size_t n, const double* m, double* out);
/* lo, hi: n bounds of the sampling box. worst_x / worst_z (n, nullable)
 * receive the pair attaining m_hat. */
NASHSEEK_API int nashseek_estimate_monotonicity(
    const nashseek_game* game,
    const double* lo,
    const double* hi,
    size_t n_samples,
    uint64_t seed,
    nashseek_monotonicity* out,
    double* worst_x,
    double* worst_z);
/* Solves P M + M^T P = Q; all k x k. */
NASHSEEK_API int nashseek_solve_lyapunov(size_t k, const double* m, const double* q, double* p_out);

/* ---- rate fitting ------------------------------------------------------- */

typedef struct nashseek_rate_fit
{
    double rate;
    double intercept;
    double r_squared;
    size_t points;
} nashseek_rate_fit;

/* Fits ln(error) against t on the fractional window [lo, hi] of the span. */
NASHSEEK_API int nashseek_fit_rate(
    const double* times,
    const double* errors,
    size_t count,
    double lo,
    double hi,
    nashseek_rate_fit* out);
/* Same, reading the t and err columns of a trajectory CSV. */
NASHSEEK_API int nashseek_fit_rate_csv(
    const char* path, double lo, double hi, nashseek_rate_fit* out);

/* ---- seeking dynamics --------------------------------------------------- */

typedef struct nashseek_params
{
    double delta;
    const double* kbar;  /* n entries, NULL = ones */
    const double* gains; /* n x n, NULL = ones */
    double dt;
    double t_end;
    size_t record_every;
} nashseek_params;

typedef struct nashseek_lyapunov_summary
{
    double decrease_fraction;
    double v_initial;
    double v_final;
    size_t burn_in_index;
    size_t samples;
} nashseek_lyapunov_summary;

NASHSEEK_API void nashseek_params_default(nashseek_params* params);

/* dx_out: n, dy_out: n x n. */
NASHSEEK_API int nashseek_rhs(
    const nashseek_game* game,
    const nashseek_graph* graph,
    const nashseek_params* params,
    const double* x,
    const double* y,
    double* dx_out,
    double* dy_out);

/* y0 (n x n) and x_star (n) are optional. On NASHSEEK_ERR_DIVERGED,
 * nashseek_last_divergence reports where it happened. */
NASHSEEK_API int nashseek_integrate(
    const nashseek_game* game,
    const nashseek_graph* graph,
    const nashseek_params* params,
    const double* x0,
    const double* y0,
    const double* x_star,
    nashseek_trajectory** out);
/* time and x_out (n, nullable) of the most recent divergence on this thread. */
NASHSEEK_API int nashseek_last_divergence(double* time, double* x_out, size_t n);

NASHSEEK_API void nashseek_trajectory_destroy(nashseek_trajectory* traj);
NASHSEEK_API size_t nashseek_trajectory_samples(const nashseek_trajectory* traj);
NASHSEEK_API size_t nashseek_trajectory_dim(const nashseek_trajectory* traj);
NASHSEEK_API int nashseek_trajectory_has_reference(const nashseek_trajectory* traj);
NASHSEEK_API int nashseek_trajectory_graph_connected(const nashseek_trajectory* traj);
/* Any output pointer may be NULL. err is NaN without a reference x*. */
NASHSEEK_API int nashseek_trajectory_sample(
    const nashseek_trajectory* traj,
    size_t k,
    double* t,
    double* x_out,
    double* y_out,
    double* err,
    double* consensus_residual);
NASHSEEK_API int nashseek_trajectory_final(
    const nashseek_trajectory* traj, double* x_out, double* y_out, double* consensus_residual);
NASHSEEK_API int nashseek_trajectory_write_csv(
    const nashseek_trajectory* traj, const char* path, int include_estimates);
/* Requires a reference x*. */
NASHSEEK_API int nashseek_trajectory_fit_rate(
    const nashseek_trajectory* traj, double lo, double hi, nashseek_rate_fit* out);
/* Lyapunov candidate along the recorded samples; q1 (n^2 x n^2) NULL means
 * the identity. params supplies kbar and gains. */
NASHSEEK_API int nashseek_trajectory_lyapunov(
    const nashseek_trajectory* traj,
    const nashseek_graph* graph,
    const nashseek_params* params,
    double c,
    const double* q1,
    const double* x_star,
    double burn_in,
    nashseek_lyapunov_summary* out);

#ifdef __cplusplus
}
#endif

#endif /* NASHSEEK_H */
