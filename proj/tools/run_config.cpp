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

#include "run_config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace nashseek::cli
{
namespace
{

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& msg)
{
    throw ConfigError(field + ": " + msg);
}

double get_number(const json& j, const std::string& field)
{
    if (!j.is_number())
    {
        fail(field, "expected a number");
    }
    return j.get<double>();
}

bool get_bool(const json& j, const std::string& field)
{
    if (!j.is_boolean())
    {
        fail(field, "expected true or false");
    }
    return j.get<bool>();
}

std::string get_string(const json& j, const std::string& field)
{
    if (!j.is_string())
    {
        fail(field, "expected a string");
    }
    return j.get<std::string>();
}

std::size_t get_count(const json& j, const std::string& field)
{
    if (!j.is_number_integer() || j.get<long long>() < 0)
    {
        fail(field, "expected a non-negative integer");
    }
    return j.get<std::size_t>();
}

Vector get_vector(const json& j, const std::string& field)
{
    if (!j.is_array())
    {
        fail(field, "expected an array of numbers");
    }
    Vector out;
    for (std::size_t k = 0; k < j.size(); ++k)
    {
        out.push_back(get_number(j[k], field + "[" + std::to_string(k) + "]"));
    }
    return out;
}

Matrix get_matrix(const json& j, const std::string& field)
{
    if (!j.is_array())
    {
        fail(field, "expected an array of rows");
    }
    Matrix out;
    for (std::size_t k = 0; k < j.size(); ++k)
    {
        out.push_back(get_vector(j[k], field + "[" + std::to_string(k) + "]"));
    }
    return out;
}

template <class F>
void for_fields(const json& obj, const std::string& prefix, F&& handle)
{
    if (!obj.is_object())
    {
        fail(prefix.empty() ? "<root>" : prefix, "expected an object");
    }
    for (auto it = obj.begin(); it != obj.end(); ++it)
    {
        const std::string field = prefix.empty() ? it.key() : prefix + "." + it.key();
        if (!handle(it.key(), it.value(), field))
        {
            fail(field, "unknown field");
        }
    }
}

void check_square(const Matrix& m, std::size_t n, const std::string& field)
{
    if (m.size() != n)
    {
        fail(field, "expected " + std::to_string(n) + " rows, got " + std::to_string(m.size()));
    }
    for (std::size_t r = 0; r < m.size(); ++r)
    {
        if (m[r].size() != n)
        {
            fail(
                field + "[" + std::to_string(r) + "]",
                "expected " + std::to_string(n) + " entries");
        }
    }
}

void check_size(const Vector& v, std::size_t n, const std::string& field)
{
    if (v.size() != n)
    {
        fail(
            field,
            "expected " + std::to_string(n) + " entries, got " + std::to_string(v.size()));
    }
}

json vector_or_null(const std::optional<Vector>& v)
{
    return v ? json(*v) : json(nullptr);
}

}  // namespace

std::size_t RunConfig::players() const
{
    if (game.name == "example1" || game.name == "example2")
    {
        return 5;
    }
    if (game.name == "example3")
    {
        if (game.rho)
        {
            return game.rho->size();
        }
        return game.x_desired ? game.x_desired->size() : 5;
    }
    if (game.name == "quadratic" && game.quadratic)
    {
        return game.quadratic->v.size();
    }
    return 0;
}

void RunConfig::validate() const
{
    if (game.name != "example1" && game.name != "example2" && game.name != "example3"
        && game.name != "quadratic")
    {
        fail("game.name", "unknown game '" + game.name + "' (example1, example2, example3, quadratic)");
    }
    if (game.name == "quadratic" && !game.quadratic)
    {
        fail("game.quadratic", "required when game.name is 'quadratic'");
    }
    const std::size_t n = players();
    if (n == 0)
    {
        fail("game", "game has no players");
    }
    if (game.name == "example2")
    {
        if (game.m)
        {
            check_size(*game.m, 5, "game.m");
        }
        if (game.d)
        {
            check_size(*game.d, 5, "game.d");
        }
    }
    if (game.name == "example3")
    {
        if (game.rho)
        {
            check_size(*game.rho, n, "game.rho");
        }
        if (game.x_desired)
        {
            check_size(*game.x_desired, n, "game.x_desired");
        }
        if (!game.rho && n != 5)
        {
            fail("game.rho", "required when game.x_desired is not of length 5");
        }
        if (!game.x_desired && n != 5)
        {
            fail("game.x_desired", "required when game.rho is not of length 5");
        }
    }
    if (game.quadratic)
    {
        const auto& q = *game.quadratic;
        if (q.h.size() != n)
        {
            fail("game.quadratic.h", "expected one matrix per player");
        }
        for (std::size_t i = 0; i < n; ++i)
        {
            check_square(q.h[i], n, "game.quadratic.h[" + std::to_string(i) + "]");
        }
        check_square(q.v, n, "game.quadratic.v");
        if (!q.g.empty())
        {
            check_size(q.g, n, "game.quadratic.g");
        }
    }

    if (graph.n != n)
    {
        fail(
            "graph.n",
            "graph has " + std::to_string(graph.n) + " nodes but the game has "
                + std::to_string(n) + " players");
    }
    if (graph.preset == "edges")
    {
        for (std::size_t e = 0; e < graph.edges.size(); ++e)
        {
            for (const std::size_t v : graph.edges[e])
            {
                if (v < 1 || v > graph.n)
                {
                    fail(
                        "graph.edges[" + std::to_string(e) + "]",
                        "endpoint out of range 1.." + std::to_string(graph.n));
                }
            }
        }
    }
    else if (
        graph.preset != "cycle" && graph.preset != "path" && graph.preset != "complete"
        && graph.preset != "star")
    {
        fail("graph.preset", "unknown preset '" + graph.preset + "' (cycle, path, complete, star, edges)");
    }

    if (!(seeker.delta > 0.0))
    {
        fail("seeker.delta", "must be > 0");
    }
    if (!(seeker.dt > 0.0))
    {
        fail("seeker.dt", "must be > 0");
    }
    if (!(seeker.t_end >= seeker.dt))
    {
        fail("seeker.t_end", "must be >= seeker.dt");
    }
    if (seeker.record_every < 1)
    {
        fail("seeker.record_every", "must be >= 1");
    }
    if (!seeker.kbar.empty())
    {
        check_size(seeker.kbar, n, "seeker.kbar");
        for (const double k : seeker.kbar)
        {
            if (!(k > 0.0))
            {
                fail("seeker.kbar", "entries must be > 0");
            }
        }
    }
    if (!seeker.gains.empty())
    {
        check_square(seeker.gains, n, "seeker.gains");
        for (const auto& row : seeker.gains)
        {
            for (const double m : row)
            {
                if (!(m > 0.0))
                {
                    fail("seeker.gains", "entries must be > 0");
                }
            }
        }
    }

    check_size(x0, n, "x0");
    if (y0)
    {
        check_square(*y0, n, "y0");
    }
    if (x_star)
    {
        check_size(*x_star, n, "x_star");
    }

    if (!(analysis.tol > 0.0))
    {
        fail("analysis.tol", "must be > 0");
    }
    if (!(analysis.fd_step > 0.0))
    {
        fail("analysis.fd_step", "must be > 0");
    }
    if (!(analysis.lyapunov_c > 0.0 && analysis.lyapunov_c < 1.0))
    {
        fail("analysis.lyapunov_c", "must lie in (0, 1)");
    }
    if (!(analysis.burn_in >= 0.0 && analysis.burn_in < 1.0))
    {
        fail("analysis.burn_in", "must lie in [0, 1)");
    }
    const auto [lo, hi] = analysis.rate_window;
    if (!(lo >= 0.0 && lo < hi && hi <= 1.0))
    {
        fail("analysis.rate_window", "must satisfy 0 <= lo < hi <= 1");
    }
    if (!(analysis.box_lo < analysis.box_hi))
    {
        fail("analysis.box", "lower bound must be below upper bound");
    }
    if (analysis.samples < 2)
    {
        fail("analysis.samples", "must be >= 2");
    }
}

nlohmann::json to_json(const RunConfig& cfg)
{
    json game = {{"name", cfg.game.name}};
    if (cfg.game.m)
    {
        game["m"] = *cfg.game.m;
    }
    if (cfg.game.d)
    {
        game["d"] = *cfg.game.d;
    }
    if (cfg.game.rho)
    {
        game["rho"] = *cfg.game.rho;
    }
    if (cfg.game.p0)
    {
        game["p0"] = *cfg.game.p0;
    }
    if (cfg.game.q0)
    {
        game["q0"] = *cfg.game.q0;
    }
    if (cfg.game.x_desired)
    {
        game["x_desired"] = *cfg.game.x_desired;
    }
    if (cfg.game.quadratic)
    {
        game["quadratic"] = {
            {"h", cfg.game.quadratic->h},
            {"v", cfg.game.quadratic->v},
            {"g", cfg.game.quadratic->g}};
    }

    json graph = {{"preset", cfg.graph.preset}, {"n", cfg.graph.n}};
    if (cfg.graph.preset == "edges")
    {
        graph["edges"] = cfg.graph.edges;
    }

    return {
        {"game", game},
        {"graph", graph},
        {"seeker",
         {{"delta", cfg.seeker.delta},
          {"kbar", cfg.seeker.kbar},
          {"gains", cfg.seeker.gains},
          {"dt", cfg.seeker.dt},
          {"t_end", cfg.seeker.t_end},
          {"record_every", cfg.seeker.record_every}}},
        {"x0", cfg.x0},
        {"y0", cfg.y0 ? json(*cfg.y0) : json(nullptr)},
        {"x_star", vector_or_null(cfg.x_star)},
        {"output",
         {{"dir", cfg.output.dir},
          {"trajectory", cfg.output.trajectory},
          {"summary", cfg.output.summary},
          {"plot", cfg.output.plot},
          {"include_estimates", cfg.output.include_estimates}}},
        {"analysis",
         {{"assumptions", cfg.analysis.assumptions},
          {"lyapunov", cfg.analysis.lyapunov},
          {"rate_fit", cfg.analysis.rate_fit},
          {"monotonicity", cfg.analysis.monotonicity},
          {"tol", cfg.analysis.tol},
          {"fd_step", cfg.analysis.fd_step},
          {"lyapunov_c", cfg.analysis.lyapunov_c},
          {"burn_in", cfg.analysis.burn_in},
          {"rate_window", cfg.analysis.rate_window},
          {"box", {cfg.analysis.box_lo, cfg.analysis.box_hi}},
          {"samples", cfg.analysis.samples},
          {"seed", cfg.analysis.seed}}},
    };
}

RunConfig from_json(const nlohmann::json& doc, const RunConfig& base)
{
    RunConfig cfg = base;
    for_fields(doc, "", [&](const std::string& key, const json& val, const std::string& field) {
        if (key == "game")
        {
            for_fields(val, field, [&](const std::string& k, const json& v, const std::string& f) {
                if (k == "name")
                    cfg.game.name = get_string(v, f);
                else if (k == "m")
                    cfg.game.m = get_vector(v, f);
                else if (k == "d")
                    cfg.game.d = get_vector(v, f);
                else if (k == "rho")
                    cfg.game.rho = get_vector(v, f);
                else if (k == "p0")
                    cfg.game.p0 = get_number(v, f);
                else if (k == "q0")
                    cfg.game.q0 = get_number(v, f);
                else if (k == "x_desired")
                    cfg.game.x_desired = get_vector(v, f);
                else if (k == "quadratic")
                {
                    QuadraticSpec q;
                    for_fields(v, f, [&](const std::string& qk, const json& qv, const std::string& qf) {
                        if (qk == "h")
                        {
                            if (!qv.is_array())
                            {
                                fail(qf, "expected an array of per-player matrices");
                            }
                            for (std::size_t i = 0; i < qv.size(); ++i)
                            {
                                q.h.push_back(get_matrix(qv[i], qf + "[" + std::to_string(i) + "]"));
                            }
                        }
                        else if (qk == "v")
                            q.v = get_matrix(qv, qf);
                        else if (qk == "g")
                            q.g = get_vector(qv, qf);
                        else
                            return false;
                        return true;
                    });
                    cfg.game.quadratic = std::move(q);
                }
                else
                    return false;
                return true;
            });
        }
        else if (key == "graph")
        {
            for_fields(val, field, [&](const std::string& k, const json& v, const std::string& f) {
                if (k == "preset")
                    cfg.graph.preset = get_string(v, f);
                else if (k == "n")
                    cfg.graph.n = get_count(v, f);
                else if (k == "edges")
                {
                    if (!v.is_array())
                    {
                        fail(f, "expected an array of [i, j] pairs");
                    }
                    cfg.graph.edges.clear();
                    for (std::size_t e = 0; e < v.size(); ++e)
                    {
                        const std::string ef = f + "[" + std::to_string(e) + "]";
                        if (!v[e].is_array() || v[e].size() != 2)
                        {
                            fail(ef, "expected an [i, j] pair");
                        }
                        cfg.graph.edges.push_back(
                            {get_count(v[e][0], ef), get_count(v[e][1], ef)});
                    }
                    cfg.graph.preset = "edges";
                }
                else
                    return false;
                return true;
            });
        }
        else if (key == "seeker")
        {
            for_fields(val, field, [&](const std::string& k, const json& v, const std::string& f) {
                if (k == "delta")
                    cfg.seeker.delta = get_number(v, f);
                else if (k == "kbar")
                    cfg.seeker.kbar = get_vector(v, f);
                else if (k == "gains")
                    cfg.seeker.gains = get_matrix(v, f);
                else if (k == "dt")
                    cfg.seeker.dt = get_number(v, f);
                else if (k == "t_end")
                    cfg.seeker.t_end = get_number(v, f);
                else if (k == "record_every")
                    cfg.seeker.record_every = get_count(v, f);
                else
                    return false;
                return true;
            });
        }
        else if (key == "x0")
            cfg.x0 = get_vector(val, field);
        else if (key == "y0")
            cfg.y0 = val.is_null() ? std::nullopt : std::optional<Matrix>(get_matrix(val, field));
        else if (key == "x_star")
            cfg.x_star = val.is_null() ? std::nullopt : std::optional<Vector>(get_vector(val, field));
        else if (key == "output")
        {
            for_fields(val, field, [&](const std::string& k, const json& v, const std::string& f) {
                if (k == "dir")
                    cfg.output.dir = get_string(v, f);
                else if (k == "trajectory")
                    cfg.output.trajectory = get_string(v, f);
                else if (k == "summary")
                    cfg.output.summary = get_string(v, f);
                else if (k == "plot")
                    cfg.output.plot = get_string(v, f);
                else if (k == "include_estimates")
                    cfg.output.include_estimates = get_bool(v, f);
                else
                    return false;
                return true;
            });
        }
        else if (key == "analysis")
        {
            for_fields(val, field, [&](const std::string& k, const json& v, const std::string& f) {
                if (k == "assumptions")
                    cfg.analysis.assumptions = get_bool(v, f);
                else if (k == "lyapunov")
                    cfg.analysis.lyapunov = get_bool(v, f);
                else if (k == "rate_fit")
                    cfg.analysis.rate_fit = get_bool(v, f);
                else if (k == "monotonicity")
                    cfg.analysis.monotonicity = get_bool(v, f);
                else if (k == "tol")
                    cfg.analysis.tol = get_number(v, f);
                else if (k == "fd_step")
                    cfg.analysis.fd_step = get_number(v, f);
                else if (k == "lyapunov_c")
                    cfg.analysis.lyapunov_c = get_number(v, f);
                else if (k == "burn_in")
                    cfg.analysis.burn_in = get_number(v, f);
                else if (k == "rate_window" || k == "box")
                {
                    const Vector w = get_vector(v, f);
                    if (w.size() != 2)
                    {
                        fail(f, "expected [lo, hi]");
                    }
                    if (k == "box")
                    {
                        cfg.analysis.box_lo = w[0];
                        cfg.analysis.box_hi = w[1];
                    }
                    else
                    {
                        cfg.analysis.rate_window = {w[0], w[1]};
                    }
                }
                else if (k == "samples")
                    cfg.analysis.samples = get_count(v, f);
                else if (k == "seed")
                    cfg.analysis.seed = get_count(v, f);
                else
                    return false;
                return true;
            });
        }
        else
            return false;
        return true;
    });
    return cfg;
}

RunConfig defaults_for_game(const std::string& game_name)
{
    RunConfig cfg;
    cfg.game.name = game_name;
    if (game_name == "example1")
    {
        cfg.seeker.delta = 0.005;
        cfg.seeker.t_end = 400.0;
        cfg.seeker.record_every = 100;
        cfg.x0 = {1.0, 2.0, 0.0, 0.0, 0.0};
        cfg.x_star = Vector{1.5, 2.25, -19.0 / 48.0, -1.0 / 6.0, 1.0 / 12.0};
    }
    else if (game_name == "example2")
    {
        cfg.seeker.delta = 0.02;
        cfg.seeker.t_end = 150.0;
        cfg.seeker.record_every = 100;
        cfg.x0 = Vector(5, 20.0);
        cfg.x_star = Vector(5, 0.0);
        cfg.analysis.box_lo = -25.0;
        cfg.analysis.box_hi = 25.0;
    }
    else if (game_name == "example3")
    {
        cfg.seeker.delta = 0.02;
        cfg.seeker.t_end = 300.0;
        cfg.seeker.record_every = 100;
        cfg.x0 = Vector(5, -10.0);
        cfg.analysis.box_lo = -50.0;
        cfg.analysis.box_hi = 50.0;
    }
    return cfg;
}

nlohmann::json load_config_file(const std::string& path)
{
    std::ifstream is(path);
    if (!is)
    {
        throw ConfigError(path + ": cannot open config file");
    }
    try
    {
        return json::parse(is, nullptr, true, true);
    }
    catch (const json::parse_error& e)
    {
        throw ConfigError(path + ": " + e.what());
    }
}

RunConfig resolve_config(
    const std::optional<nlohmann::json>& file_doc,
    const std::optional<std::string>& game_override)
{
    std::string game_name = "example3";
    if (file_doc && file_doc->is_object() && file_doc->contains("game"))
    {
        const json& g = (*file_doc)["game"];
        if (g.is_object() && g.contains("name") && g["name"].is_string())
        {
            game_name = g["name"].get<std::string>();
        }
    }
    if (game_override)
    {
        game_name = *game_override;
    }

    RunConfig cfg = defaults_for_game(game_name);
    if (const char* env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0')
    {
        cfg.output.dir = env;
    }
    else
    {
        cfg.output.dir = "nashseek-out";
    }
    if (file_doc)
    {
        cfg = from_json(*file_doc, cfg);
    }
    cfg.game.name = game_name;
    if (cfg.game.name == "quadratic" && cfg.game.quadratic && cfg.x0.empty())
    {
        cfg.x0 = Vector(cfg.game.quadratic->v.size(), 0.0);
    }
    if (cfg.game.quadratic && (!file_doc || !file_doc->contains("graph")))
    {
        cfg.graph.n = cfg.game.quadratic->v.size();
    }
    return cfg;
}

GraphSpec parse_graph_flag(const std::string& text)
{
    GraphSpec g;
    const auto first = text.find(':');
    if (first == std::string::npos)
    {
        fail("--graph", "expected PRESET:N or edges:N:I-J,...");
    }
    g.preset = text.substr(0, first);
    const auto second = text.find(':', first + 1);
    const std::string n_text = text.substr(first + 1, second == std::string::npos ? std::string::npos : second - first - 1);
    try
    {
        std::size_t used = 0;
        const long long n = std::stoll(n_text, &used);
        if (used != n_text.size() || n < 1)
        {
            throw std::invalid_argument(n_text);
        }
        g.n = static_cast<std::size_t>(n);
    }
    catch (const std::exception&)
    {
        fail("--graph", "bad node count '" + n_text + "'");
    }
    if (g.preset == "edges")
    {
        if (second == std::string::npos)
        {
            fail("--graph", "edges:N needs an edge list, e.g. edges:3:1-2,2-3");
        }
        std::stringstream ss(text.substr(second + 1));
        std::string item;
        while (std::getline(ss, item, ','))
        {
            const auto dash = item.find('-');
            try
            {
                if (dash == std::string::npos)
                {
                    throw std::invalid_argument(item);
                }
                g.edges.push_back(
                    {static_cast<std::size_t>(std::stoul(item.substr(0, dash))),
                     static_cast<std::size_t>(std::stoul(item.substr(dash + 1)))});
            }
            catch (const std::exception&)
            {
                fail("--graph", "bad edge '" + item + "' (expected I-J)");
            }
        }
    }
    else if (second != std::string::npos)
    {
        fail("--graph", "only 'edges' takes an edge list");
    }
    return g;
}

Vector parse_vector_flag(const std::string& text, const std::string& field)
{
    Vector out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        try
        {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos)
            {
                throw std::invalid_argument(item);
            }
        }
        catch (const std::exception&)
        {
            fail(field, "bad number '" + item + "'");
        }
    }
    if (out.empty())
    {
        fail(field, "expected a comma-separated list of numbers");
    }
    return out;
}

}  // namespace nashseek::cli
