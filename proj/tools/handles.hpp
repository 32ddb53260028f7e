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

#include <nashseek/nashseek.h>

#include <memory>
#include <stdexcept>
#include <string>

namespace nashseek::cli
{

struct GraphDeleter
{
    void operator()(nashseek_graph* g) const { nashseek_graph_destroy(g); }
};
struct GameDeleter
{
    void operator()(nashseek_game* g) const { nashseek_game_destroy(g); }
};
struct TrajectoryDeleter
{
    void operator()(nashseek_trajectory* t) const { nashseek_trajectory_destroy(t); }
};

using GraphHandle = std::unique_ptr<nashseek_graph, GraphDeleter>;
using GameHandle = std::unique_ptr<nashseek_game, GameDeleter>;
using TrajectoryHandle = std::unique_ptr<nashseek_trajectory, TrajectoryDeleter>;

/// A failing C API call, carrying its status.
class ApiError : public std::runtime_error
{
   public:
    ApiError(int status, const std::string& what)
        : std::runtime_error(what), status_(status)
    {
    }
    int status() const noexcept { return status_; }

   private:
    int status_;
};

/// Throws ApiError with the library's message when status is not OK.
inline void check(int status, const char* context)
{
    if (status != NASHSEEK_OK)
    {
        throw ApiError(status, std::string(context) + ": " + nashseek_last_error());
    }
}

}  // namespace nashseek::cli
