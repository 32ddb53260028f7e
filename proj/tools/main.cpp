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
#include "run_config.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <thread>

namespace
{

using namespace nashseek::cli;

/// Flags shared by run, check and nash. Each one overrides its config field.
struct Overrides
{
    std::string config;
    std::string game;
    std::string graph;
    std::string x0;
    std::string x_star;
    std::optional<double> delta;
    std::optional<double> dt;
    std::optional<double> t_end;
    std::string kbar;
    std::optional<std::size_t> record_every;
    std::string out_dir;
    bool include_estimates = false;
    bool assumptions = false;
    bool monotonicity = false;
    std::optional<std::size_t> samples;
    std::optional<std::uint64_t> seed;
    bool dump_config = false;

    void add_to(CLI::App* app)
    {
        app->add_option("-c,--config", config, "JSON config file")->check(CLI::ExistingFile);
        app->add_option("--game", game, "example1, example2, example3 or quadratic");
        app->add_option("--graph", graph, "cycle:N, path:N, complete:N, star:N or edges:N:1-2,2-3,...");
        app->add_option("--x0", x0, "initial actions, comma separated");
        app->add_option("--x-star", x_star, "known equilibrium, comma separated");
        app->add_option("--delta", delta, "time-scale separation factor");
        app->add_option("--dt", dt, "integration step");
        app->add_option("--t-end", t_end, "integration horizon");
        app->add_option("--kbar", kbar, "per-player action gains, comma separated");
        app->add_option("--record-every", record_every, "record a sample every N steps");
        app->add_option("-o,--out-dir", out_dir, "output directory (default $NASHSEEK_OUTPUT_DIR or ./nashseek-out)");
        app->add_flag("--include-estimates", include_estimates, "add y_i_j columns to the CSV");
        app->add_flag("--assumptions", assumptions, "request the assumption report");
        app->add_flag("--monotonicity", monotonicity, "request the sampled monotonicity check");
        app->add_option("--samples", samples, "monotonicity sample pairs");
        app->add_option("--seed", seed, "monotonicity RNG seed");
        app->add_flag("--dump-config", dump_config, "print the resolved config and exit");
    }

    std::optional<std::string> game_override() const
    {
        return game.empty() ? std::nullopt : std::optional<std::string>(game);
    }

    void apply(RunConfig& cfg) const
    {
        if (!graph.empty())
        {
            cfg.graph = parse_graph_flag(graph);
        }
        if (!x0.empty())
        {
            cfg.x0 = parse_vector_flag(x0, "--x0");
        }
        if (!x_star.empty())
        {
            cfg.x_star = parse_vector_flag(x_star, "--x-star");
        }
        if (delta)
        {
            cfg.seeker.delta = *delta;
        }
        if (dt)
        {
            cfg.seeker.dt = *dt;
        }
        if (t_end)
        {
            cfg.seeker.t_end = *t_end;
        }
        if (!kbar.empty())
        {
            cfg.seeker.kbar = parse_vector_flag(kbar, "--kbar");
        }
        if (record_every)
        {
            cfg.seeker.record_every = *record_every;
        }
        if (!out_dir.empty())
        {
            cfg.output.dir = out_dir;
        }
        if (include_estimates)
        {
            cfg.output.include_estimates = true;
        }
        if (assumptions)
        {
            cfg.analysis.assumptions = true;
        }
        if (monotonicity)
        {
            cfg.analysis.monotonicity = true;
        }
        if (samples)
        {
            cfg.analysis.samples = *samples;
        }
        if (seed)
        {
            cfg.analysis.seed = *seed;
        }
    }

    RunConfig resolve() const
    {
        std::optional<nlohmann::json> doc;
        if (!config.empty())
        {
            doc = load_config_file(config);
        }
        RunConfig cfg = resolve_config(doc, game_override());
        apply(cfg);
        cfg.validate();
        return cfg;
    }
};

int dump(const RunConfig& cfg)
{
    std::cout << to_json(cfg).dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"nashseek: distributed Nash equilibrium seeking over communication graphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(nashseek_version()));

    Overrides run_o;
    std::string batch_dir;
    std::size_t jobs = std::max(1u, std::thread::hardware_concurrency());
    CLI::App* run = app.add_subcommand("run", "integrate the seeking dynamics and write artifacts");
    run_o.add_to(run);
    run->add_option("--batch", batch_dir, "run every *.json config in a directory")->check(CLI::ExistingDirectory);
    run->add_option("-j,--jobs", jobs, "parallel runs for --batch");

    Overrides check_o;
    CheckOptions check_opts;
    std::string at;
    std::string from_run;
    CLI::App* chk = app.add_subcommand("check", "assumption report at a candidate equilibrium");
    check_o.add_to(chk);
    chk->add_option("--at", at, "candidate point, comma separated");
    chk->add_option("--from-run", from_run, "summary.json of an earlier run; its final x is the candidate")
        ->check(CLI::ExistingFile);
    chk->add_flag("--json", check_opts.json, "print the machine-readable report");

    Overrides nash_o;
    bool nash_json = false;
    CLI::App* nash = app.add_subcommand("nash", "closed-form equilibrium of a quadratic game");
    nash_o.add_to(nash);
    nash->add_flag("--json", nash_json, "print JSON");

    std::string csv;
    std::vector<double> window{0.2, 0.8};
    bool rate_json = false;
    CLI::App* rate = app.add_subcommand("rate", "fit an exponential rate to a trajectory CSV");
    rate->add_option("csv", csv, "trajectory CSV with t and err columns")->required()->check(CLI::ExistingFile);
    rate->add_option("--window", window, "fractional window lo hi")->expected(2)->delimiter(',');
    rate->add_flag("--json", rate_json, "print JSON");

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (run->parsed())
        {
            if (!batch_dir.empty())
            {
                if (!run_o.config.empty() || !run_o.game.empty())
                {
                    throw ConfigError("--batch: --config and --game do not apply to batch runs");
                }
                return cmd_batch(
                    batch_dir, jobs, [&](RunConfig& cfg) { run_o.apply(cfg); }, std::cout, std::cerr);
            }
            const RunConfig cfg = run_o.resolve();
            return run_o.dump_config ? dump(cfg) : cmd_run(cfg, std::cout, std::cerr);
        }
        if (chk->parsed())
        {
            const RunConfig cfg = check_o.resolve();
            if (check_o.dump_config)
            {
                return dump(cfg);
            }
            if (!at.empty())
            {
                check_opts.at = parse_vector_flag(at, "--at");
            }
            if (!from_run.empty())
            {
                check_opts.from_run = from_run;
            }
            return cmd_check(cfg, check_opts, std::cout, std::cerr);
        }
        if (nash->parsed())
        {
            const RunConfig cfg = nash_o.resolve();
            return nash_o.dump_config ? dump(cfg) : cmd_nash(cfg, nash_json, std::cout, std::cerr);
        }
        return cmd_rate(csv, {window[0], window[1]}, rate_json, std::cout, std::cerr);
    }
    catch (const ConfigError& e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    }
    catch (const ApiError& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return e.status() == NASHSEEK_ERR_DIVERGED ? kExitDiverged : kExitUsage;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
