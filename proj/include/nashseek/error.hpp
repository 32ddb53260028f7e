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

#include <stdexcept>
#include <string>

namespace nashseek
{

enum class ErrorCode
{
    InvalidArgument = 1,
    DimensionMismatch,
    SingularMatrix,
    NotHurwitz,
    Diverged,
    EmptyWindow,
    NonpositiveError,
    NotQuadratic,
    Io,
};

const char* error_code_name(ErrorCode code) noexcept;

/// Base exception for every failure raised by the library. The C API maps
/// code() one-to-one onto its integer status values.
class Error : public std::runtime_error
{
   public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

}  // namespace nashseek
