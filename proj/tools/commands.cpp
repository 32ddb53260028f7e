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


#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

namespace nashseek::cli
{
namespace
{

namespace fs = std::filesystem;
using nlohmann::json;

Vector flatten(const Matrix& m)
{
    Vector out;
    for (const auto& row : m)
    {
        out.insert(out.end(), row.begin(), row.end());
    }
    return out;
}

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_short(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string fmt_vector(const Vector& v, bool full = false)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
    {
        s += (i ? ", " : "") + (full ? fmt(v[i]) : fmt_short(v[i]));
    }
    return s + "]";
}

struct ParamsStorage
{
    Vector kbar;
    Vector gains;
    nashseek_params params{};

    explicit ParamsStorage(const SeekerSpec& s) : kbar(s.kbar), gains(flatten(s.gains))
    {
        nashseek_params_default(&params);
        params.delta = s.delta;
        params.kbar = kbar.empty() ? nullptr : kbar.data();
        params.gains = gains.empty() ? nullptr : gains.data();
        params.dt = s.dt;
        params.t_end = s.t_end;
        params.record_every = s.record_every;
    }
    ParamsStorage(const ParamsStorage&) = delete;
    ParamsStorage& operator=(const ParamsStorage&) = delete;
};

/// x* from the config, else the closed form for quadratic games.
std::optional<Vector> reference_point(
    const RunConfig& cfg, const nashseek_game* game, std::vector<std::string>& notes)
{
    if (cfg.x_star)
    {
        return cfg.x_star;
    }
    if (nashseek_game_is_quadratic(game))
    {
        Vector x(cfg.players());
        double residual = 0.0;
        const int status = nashseek_game_quadratic_nash(game, x.data(), &residual);
        if (status == NASHSEEK_OK)
        {
            return x;
        }
        notes.push_back(std::string("no closed-form equilibrium: ") + nashseek_last_error());
    }
    return std::nullopt;
}

json report_json(const nashseek_assumption_report& r, const Vector& point, const Vector& b, const Vector& own, std::size_t n)
{
    json rows = json::array();
    for (std::size_t i = 0; i < n; ++i)
    {
        rows.push_back(Vector(b.begin() + i * n, b.begin() + (i + 1) * n));
    }
    return {
        {"point", point},
        {"stationary", r.stationary != 0},
        {"stationarity_residual", r.stationarity_residual},
        {"own_hessian_negative", r.own_hessian_negative != 0},
        {"own_hessian", own},
        {"B", rows},
        {"B_diag_dominant", r.b_diag_dominant != 0},
        {"B_hurwitz", r.b_hurwitz != 0},
        {"B_max_real_eig", r.b_max_real_eig},
        {"passed", r.passed != 0},
    };
}

struct Assessment
{
    nashseek_assumption_report report{};
    Vector b;
    Vector own;
};

Assessment assess(const nashseek_game* game, const Vector& x, const AnalysisSpec& a)
{
    Assessment out;
    const std::size_t n = x.size();
    out.b.resize(n * n);
    out.own.resize(n);
    check(
        nashseek_assess_candidate(game, x.data(), a.tol, a.fd_step, &out.report, out.b.data(), out.own.data()),
        "assumption check");
    return out;
}

struct Monotonicity
{
    nashseek_monotonicity est{};
    Vector worst_x;
    Vector worst_z;
};

Monotonicity monotonicity(const nashseek_game* game, std::size_t n, const AnalysisSpec& a)
{
    Monotonicity out;
    const Vector lo(n, a.box_lo);
    const Vector hi(n, a.box_hi);
    out.worst_x.resize(n);
    out.worst_z.resize(n);
    check(
        nashseek_estimate_monotonicity(
            game, lo.data(), hi.data(), a.samples, a.seed, &out.est, out.worst_x.data(), out.worst_z.data()),
        "monotonicity estimate");
    return out;
}

json monotonicity_json(const Monotonicity& m, const AnalysisSpec& a, bool requested)
{
    return {
        {"m_hat", m.est.m_hat},
        {"violated", m.est.violated != 0},
        {"samples", m.est.samples},
        {"seed", m.est.seed},
        {"box", {a.box_lo, a.box_hi}},
        {"worst_x", m.worst_x},
        {"worst_z", m.worst_z},
        {"requested", requested},
    };
}

void write_text(const fs::path& path, const std::string& text)
{
    std::ofstream os(path, std::ios::binary);
    os << text;
    if (!os)
    {
        throw ApiError(NASHSEEK_ERR_IO, "cannot write '" + path.string() + "'");
    }
}

}  // namespace

GameHandle build_game(const GameSpec& spec, std::size_t players)
{
    nashseek_game* raw = nullptr;
    if (spec.name == "example1")
    {
        check(nashseek_game_builtin("example1", &raw), "game");
    }
    else if (spec.name == "example2")
    {
        check(
            nashseek_game_example2(
                spec.m ? spec.m->data() : nullptr, spec.d ? spec.d->data() : nullptr, &raw),
            "game");
    }
    else if (spec.name == "example3")
    {
        const Vector rho = spec.rho.value_or(Vector(players, 1.0));
        const Vector xd = spec.x_desired.value_or(Vector{10.0, 15.0, 20.0, 25.0, 30.0});
        check(
            nashseek_game_example3(
                players, rho.data(), spec.p0.value_or(0.1), spec.q0.value_or(10.0), xd.data(), &raw),
            "game");
    }
    else if (spec.name == "quadratic" && spec.quadratic)
    {
        Vector h;
        for (const auto& hi : spec.quadratic->h)
        {
            const Vector f = flatten(hi);
            h.insert(h.end(), f.begin(), f.end());
        }
        const Vector v = flatten(spec.quadratic->v);
        const Vector& g = spec.quadratic->g;
        check(
            nashseek_game_quadratic(players, h.data(), v.data(), g.empty() ? nullptr : g.data(), &raw),
            "game");
    }
    else
    {
        throw ConfigError("game.name: unknown game '" + spec.name + "'");
    }
    return GameHandle(raw);
}

GraphHandle build_graph(const GraphSpec& spec)
{
    nashseek_graph* raw = nullptr;
    if (spec.preset == "edges")
    {
        std::vector<std::size_t> flat;
        for (const auto& e : spec.edges)
        {
            flat.push_back(e[0]);
            flat.push_back(e[1]);
        }
        check(nashseek_graph_from_edges(spec.n, flat.data(), spec.edges.size(), &raw), "graph");
    }
    else
    {
        check(nashseek_graph_preset(spec.preset.c_str(), spec.n, &raw), "graph");
    }
    return GraphHandle(raw);
}

std::string plot_script(const std::string& csv_name, std::size_t players, const std::optional<Vector>& x_star)
{
    std::ostringstream os;
    os << "#!/usr/bin/env python3\n"
          "\"\"\"Plots the action trajectories x_i(t) written by `nashseek run`.\n\n"
          "Usage: python3 plot.py [trajectory.csv] [--show]\n"
          "\"\"\"\n"
          "import csv\n"
          "import pathlib\n"
          "import sys\n\n"
          "import matplotlib\n\n"
          "if \"--show\" not in sys.argv:\n"
          "    matplotlib.use(\"Agg\")\n"
          "import matplotlib.pyplot as plt\n\n"
          "HERE = pathlib.Path(__file__).resolve().parent\n"
       << "PLAYERS = " << players << "\n"
       << "X_STAR = ";
    if (x_star)
    {
        os << "[";
        for (std::size_t i = 0; i < x_star->size(); ++i)
        {
            os << (i ? ", " : "") << fmt((*x_star)[i]);
        }
        os << "]\n";
    }
    else
    {
        os << "None\n";
    }
    os << "\n\ndef main():\n"
          "    args = [a for a in sys.argv[1:] if a != \"--show\"]\n"
       << "    path = pathlib.Path(args[0]) if args else HERE / \"" << csv_name << "\"\n"
       << "    with open(path, newline=\"\") as fh:\n"
          "        rows = list(csv.DictReader(fh))\n"
          "    t = [float(r[\"t\"]) for r in rows]\n"
          "    fig, ax = plt.subplots(figsize=(7, 4.5))\n"
          "    for i in range(1, PLAYERS + 1):\n"
          "        line, = ax.plot(t, [float(r[f\"x_{i}\"]) for r in rows], label=f\"$x_{i}$\")\n"
          "        if X_STAR is not None:\n"
          "            ax.axhline(X_STAR[i - 1], color=line.get_color(), ls=\":\", lw=0.8)\n"
          "    ax.set_xlabel(\"t\")\n"
          "    ax.set_ylabel(\"actions\")\n"
          "    ax.grid(alpha=0.3)\n"
          "    ax.legend(loc=\"best\")\n"
          "    fig.tight_layout()\n"
          "    if \"--show\" in sys.argv:\n"
          "        plt.show()\n"
          "    else:\n"
          "        out = path.with_suffix(\".png\")\n"
          "        fig.savefig(out, dpi=150)\n"
          "        print(out)\n\n\n"
          "if __name__ == \"__main__\":\n"
          "    main()\n";
    return os.str();
}

int cmd_run(const RunConfig& cfg, std::ostream& log, std::ostream& err)
{
    cfg.validate();
    const std::size_t n = cfg.players();
    GameHandle game = build_game(cfg.game, n);
    GraphHandle graph = build_graph(cfg.graph);
    ParamsStorage ps(cfg.seeker);

    std::vector<std::string> warnings;
    const std::optional<Vector> x_star = reference_point(cfg, game.get(), warnings);
    int connected = 0;
    check(nashseek_graph_is_connected(graph.get(), &connected), "graph");
    if (!connected)
    {
        warnings.push_back("communication graph is disconnected; estimates cannot reach consensus");
    }

    const Vector y0 = cfg.y0 ? flatten(*cfg.y0) : Vector{};
    const fs::path dir(cfg.output.dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
    {
        throw ApiError(NASHSEEK_ERR_IO, "cannot create '" + dir.string() + "': " + ec.message());
    }

    json summary = {
        {"game", cfg.game.name},
        {"players", n},
        {"graph", {{"preset", cfg.graph.preset}, {"n", cfg.graph.n}, {"connected", connected != 0}}},
        {"x_star", x_star ? json(*x_star) : json(nullptr)},
        {"assumed",
         {{"gains", cfg.seeker.gains.empty() ? json("all ones") : json(cfg.seeker.gains)},
          {"kbar", cfg.seeker.kbar.empty() ? json("all ones") : json(cfg.seeker.kbar)},
          {"delta", cfg.seeker.delta},
          {"lyapunov_c", cfg.analysis.lyapunov_c},
          {"lyapunov_q1", "identity"}}},
    };

    nashseek_trajectory* raw = nullptr;
    const int status = nashseek_integrate(
        game.get(), graph.get(), &ps.params, cfg.x0.data(), cfg.y0 ? y0.data() : nullptr,
        x_star ? x_star->data() : nullptr, &raw);
    if (status == NASHSEEK_ERR_DIVERGED)
    {
        const std::string what = nashseek_last_error();
        double t = 0.0;
        Vector x(n);
        nashseek_last_divergence(&t, x.data(), n);
        err << "error: integration diverged at t = " << fmt_short(t) << " (delta = " << fmt_short(cfg.seeker.delta)
            << "): " << what << "\n"
            << "       a smaller seeker.delta usually restores convergence\n";
        summary["status"] = "diverged";
        summary["divergence"] = {{"time", t}, {"x", x}, {"message", what}};
        summary["warnings"] = warnings;
        write_text(dir / cfg.output.summary, summary.dump(2) + "\n");
        return kExitDiverged;
    }
    check(status, "integration");
    TrajectoryHandle traj(raw);

    const fs::path csv_path = dir / cfg.output.trajectory;
    check(
        nashseek_trajectory_write_csv(traj.get(), csv_path.string().c_str(), cfg.output.include_estimates ? 1 : 0),
        "trajectory CSV");

    Vector xf(n);
    double resid = 0.0;
    check(nashseek_trajectory_final(traj.get(), xf.data(), nullptr, &resid), "trajectory");
    summary["final_time"] = cfg.seeker.t_end;
    summary["samples"] = nashseek_trajectory_samples(traj.get());
    summary["final_x"] = xf;
    summary["consensus_residual"] = resid;
    if (x_star)
    {
        double inf = 0.0;
        double l2 = 0.0;
        for (std::size_t i = 0; i < n; ++i)
        {
            const double d = std::abs(xf[i] - (*x_star)[i]);
            inf = std::max(inf, d);
            l2 += d * d;
        }
        summary["final_error_inf"] = inf;
        summary["final_error_l2"] = std::sqrt(l2);
    }
    else
    {
        summary["final_error_inf"] = nullptr;
        summary["final_error_l2"] = nullptr;
    }

    summary["rate"] = nullptr;
    if (cfg.analysis.rate_fit && x_star)
    {
        nashseek_rate_fit fit{};
        const auto [lo, hi] = cfg.analysis.rate_window;
        if (nashseek_trajectory_fit_rate(traj.get(), lo, hi, &fit) == NASHSEEK_OK)
        {
            summary["rate"] = {
                {"rate", fit.rate},
                {"intercept", fit.intercept},
                {"r_squared", fit.r_squared},
                {"points", fit.points},
                {"window", {lo, hi}}};
        }
        else
        {
            summary["rate"] = {{"error", nashseek_last_error()}};
        }
    }

    summary["lyapunov"] = nullptr;
    if (cfg.analysis.lyapunov && x_star)
    {
        nashseek_lyapunov_summary ly{};
        if (nashseek_trajectory_lyapunov(
                traj.get(), graph.get(), &ps.params, cfg.analysis.lyapunov_c, nullptr, x_star->data(),
                cfg.analysis.burn_in, &ly)
            == NASHSEEK_OK)
        {
            summary["lyapunov"] = {
                {"c", cfg.analysis.lyapunov_c},
                {"burn_in", cfg.analysis.burn_in},
                {"decrease_fraction", ly.decrease_fraction},
                {"v_initial", ly.v_initial},
                {"v_final", ly.v_final},
                {"burn_in_index", ly.burn_in_index},
                {"samples", ly.samples}};
        }
        else
        {
            summary["lyapunov"] = {{"error", nashseek_last_error()}};
        }
    }

    bool checks_ok = true;
    summary["assumptions"] = nullptr;
    if (cfg.analysis.assumptions)
    {
        const Vector& point = x_star ? *x_star : xf;
        const Assessment a = assess(game.get(), point, cfg.analysis);
        summary["assumptions"] = report_json(a.report, point, a.b, a.own, n);
        summary["assumptions"]["point_source"] = x_star ? "x_star" : "final_x";
        checks_ok = checks_ok && a.report.passed;
    }
    summary["monotonicity"] = nullptr;
    if (cfg.analysis.monotonicity)
    {
        const Monotonicity m = monotonicity(game.get(), n, cfg.analysis);
        summary["monotonicity"] = monotonicity_json(m, cfg.analysis, true);
        checks_ok = checks_ok && !m.est.violated;
    }

    summary["warnings"] = warnings;
    summary["status"] = checks_ok ? "ok" : "checks_failed";
    write_text(dir / cfg.output.summary, summary.dump(2) + "\n");
    write_text(dir / cfg.output.plot, plot_script(cfg.output.trajectory, n, x_star));

    for (const auto& w : warnings)
    {
        err << "warning: " << w << "\n";
    }
    log << "game " << cfg.game.name << " on " << cfg.graph.preset << ":" << cfg.graph.n << ", t_end "
        << fmt_short(cfg.seeker.t_end) << ", delta " << fmt_short(cfg.seeker.delta) << "\n"
        << "final x             " << fmt_vector(xf) << "\n";
    if (x_star)
    {
        log << "x*                  " << fmt_vector(*x_star) << "\n"
            << "final error (inf)   " << fmt_short(summary["final_error_inf"].get<double>()) << "\n";
    }
    log << "consensus residual  " << fmt_short(resid) << "\n";
    if (summary["rate"].is_object() && summary["rate"].contains("rate"))
    {
        log << "fitted rate         " << fmt_short(summary["rate"]["rate"].get<double>()) << " (r^2 "
            << fmt_short(summary["rate"]["r_squared"].get<double>()) << ")\n";
    }
    if (summary["lyapunov"].is_object() && summary["lyapunov"].contains("decrease_fraction"))
    {
        log << "V decreasing        " << fmt_short(100.0 * summary["lyapunov"]["decrease_fraction"].get<double>())
            << "% of samples after burn-in\n";
    }
    if (cfg.analysis.assumptions)
    {
        log << "assumptions         " << (summary["assumptions"]["passed"].get<bool>() ? "pass" : "FAIL") << "\n";
    }
    if (cfg.analysis.monotonicity)
    {
        log << "monotonicity        m_hat " << fmt_short(summary["monotonicity"]["m_hat"].get<double>())
            << (summary["monotonicity"]["violated"].get<bool>() ? " (violated)" : "") << "\n";
    }
    log << "wrote " << csv_path.string() << ", " << (dir / cfg.output.summary).string() << ", "
        << (dir / cfg.output.plot).string() << "\n";
    return checks_ok ? kExitOk : kExitChecksFailed;
}

int cmd_batch(
    const std::string& dir,
    std::size_t jobs,
    const std::function<void(RunConfig&)>& apply,
    std::ostream& log,
    std::ostream& err)
{
    std::vector<fs::path> files;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(dir, ec))
    {
        if (entry.is_regular_file() && entry.path().extension() == ".json")
        {
            files.push_back(entry.path());
        }
    }
    if (ec)
    {
        err << "error: cannot read batch directory '" << dir << "': " << ec.message() << "\n";
        return kExitUsage;
    }
    if (files.empty())
    {
        err << "error: no *.json configs in '" << dir << "'\n";
        return kExitUsage;
    }
    std::sort(files.begin(), files.end());

    struct Result
    {
        int code = kExitOk;
        std::ostringstream log;
        std::ostringstream err;
    };
    std::vector<Result> results(files.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < files.size(); k = next++)
        {
            Result& r = results[k];
            try
            {
                RunConfig cfg = resolve_config(load_config_file(files[k].string()), std::nullopt);
                apply(cfg);
                cfg.output.dir = (fs::path(cfg.output.dir) / files[k].stem()).string();
                r.code = cmd_run(cfg, r.log, r.err);
            }
            catch (const ConfigError& e)
            {
                r.err << "error: " << files[k].filename().string() << ": " << e.what() << "\n";
                r.code = kExitUsage;
            }
            catch (const std::exception& e)
            {
                r.err << "error: " << files[k].filename().string() << ": " << e.what() << "\n";
                r.code = kExitUsage;
            }
        }
    };
    const std::size_t threads = std::max<std::size_t>(1, std::min(jobs, files.size()));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < threads; ++t)
    {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool)
    {
        t.join();
    }

    int worst = kExitOk;
    for (std::size_t k = 0; k < files.size(); ++k)
    {
        log << "== " << files[k].filename().string() << " (exit " << results[k].code << ")\n"
            << results[k].log.str();
        err << results[k].err.str();
        worst = std::max(worst, results[k].code);
    }
    return worst;
}

int cmd_check(const RunConfig& cfg, const CheckOptions& opts, std::ostream& out, std::ostream& err)
{
    cfg.validate();
    const std::size_t n = cfg.players();
    GameHandle game = build_game(cfg.game, n);

    Vector point;
    std::string source;
    if (opts.at)
    {
        point = *opts.at;
        source = "--at";
    }
    else if (opts.from_run)
    {
        std::ifstream is(*opts.from_run);
        if (!is)
        {
            throw ConfigError("--from-run: cannot open '" + *opts.from_run + "'");
        }
        json doc;
        try
        {
            doc = json::parse(is);
        }
        catch (const json::exception& e)
        {
            throw ConfigError("--from-run: " + std::string(e.what()));
        }
        if (!doc.contains("final_x") || !doc["final_x"].is_array())
        {
            throw ConfigError("--from-run: summary has no final_x (did the run complete?)");
        }
        point = doc["final_x"].get<Vector>();
        source = "final x of " + *opts.from_run;
    }
    else if (cfg.x_star)
    {
        point = *cfg.x_star;
        source = "x_star";
    }
    else if (nashseek_game_is_quadratic(game.get()))
    {
        point.resize(n);
        check(nashseek_game_quadratic_nash(game.get(), point.data(), nullptr), "equilibrium");
        source = "closed-form equilibrium";
    }
    else
    {
        throw ConfigError(
            "missing candidate: game '" + cfg.game.name
            + "' is not quadratic; pass --at, --from-run or set x_star");
    }
    if (point.size() != n)
    {
        throw ConfigError(
            "candidate: expected " + std::to_string(n) + " entries, got " + std::to_string(point.size()));
    }

    const Assessment a = assess(game.get(), point, cfg.analysis);
    const Monotonicity m = monotonicity(game.get(), n, cfg.analysis);
    const bool mono_ok = !cfg.analysis.monotonicity || !m.est.violated;
    const bool passed = a.report.passed && mono_ok;

    if (opts.json)
    {
        json doc = {
            {"game", cfg.game.name},
            {"candidate_source", source},
            {"assumptions", report_json(a.report, point, a.b, a.own, n)},
            {"monotonicity", monotonicity_json(m, cfg.analysis, cfg.analysis.monotonicity)},
            {"passed", passed},
        };
        out << doc.dump(2) << "\n";
    }
    else
    {
        auto yn = [](int v) { return v ? "yes" : "NO"; };
        out << "game              " << cfg.game.name << "\n"
            << "candidate         " << fmt_vector(point) << "  (" << source << ")\n"
            << "stationary        " << yn(a.report.stationary) << "  (max |df_i/dx_i| = "
            << fmt_short(a.report.stationarity_residual) << ", tol " << fmt_short(cfg.analysis.tol) << ")\n"
            << "own concavity     " << yn(a.report.own_hessian_negative) << "  (d2f_i/dx_i2 = "
            << fmt_vector(a.own) << ")\n"
            << "B diag dominant   " << yn(a.report.b_diag_dominant) << "\n"
            << "B Hurwitz         " << yn(a.report.b_hurwitz) << "  (max Re eig "
            << fmt_short(a.report.b_max_real_eig) << ")\n"
            << "monotonicity      m_hat " << fmt_short(m.est.m_hat) << " over " << m.est.samples
            << " pairs in [" << fmt_short(cfg.analysis.box_lo) << ", " << fmt_short(cfg.analysis.box_hi)
            << "]^" << n;
        if (cfg.analysis.monotonicity)
        {
            out << (m.est.violated ? "  (violated)" : "  (ok)") << "\n";
        }
        else
        {
            out << "  (informational)\n";
        }
        out << "result            " << (passed ? "PASS" : "FAIL") << "\n";
    }
    (void)err;
    return passed ? kExitOk : kExitChecksFailed;
}

int cmd_nash(const RunConfig& cfg, bool json_out, std::ostream& out, std::ostream& err)
{
    cfg.validate();
    const std::size_t n = cfg.players();
    GameHandle game = build_game(cfg.game, n);
    Vector x(n);
    double residual = 0.0;
    check(nashseek_game_quadratic_nash(game.get(), x.data(), &residual), "nash");
    if (json_out)
    {
        out << json{{"game", cfg.game.name}, {"x_star", x}, {"stationarity_residual", residual}}.dump(2)
            << "\n";
    }
    else
    {
        for (std::size_t i = 0; i < n; ++i)
        {
            out << "x_" << (i + 1) << " = " << fmt(x[i]) << "\n";
        }
        out << "stationarity residual = " << fmt_short(residual) << "\n";
    }
    (void)err;
    return kExitOk;
}

int cmd_rate(
    const std::string& csv_path,
    std::array<double, 2> window,
    bool json_out,
    std::ostream& out,
    std::ostream& err)
{
    nashseek_rate_fit fit{};
    check(nashseek_fit_rate_csv(csv_path.c_str(), window[0], window[1], &fit), "rate");
    if (json_out)
    {
        out << json{{"rate", fit.rate},
                    {"intercept", fit.intercept},
                    {"r_squared", fit.r_squared},
                    {"points", fit.points},
                    {"window", window}}
                   .dump(2)
            << "\n";
    }
    else
    {
        out << "rate       " << fmt(fit.rate) << "\n"
            << "intercept  " << fmt(fit.intercept) << "\n"
            << "r^2        " << fmt(fit.r_squared) << "\n"
            << "points     " << fit.points << "\n";
        if (fit.rate <= 0.0)
        {
            err << "warning: error is not decaying over the window\n";
        }
    }
    return kExitOk;
}

}  // namespace nashseek::cli
