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

#include "nashseek/error.hpp"

namespace nashseek
{

const char* error_code_name(ErrorCode code) noexcept
{
    switch (code)
    {
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
        case ErrorCode::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::SingularMatrix:
            return "SingularMatrix";
        case ErrorCode::NotHurwitz:
            return "NotHurwitz";
        case ErrorCode::Diverged:
            return "Diverged";
        case ErrorCode::EmptyWindow:
            return "EmptyWindow";
        case ErrorCode::NonpositiveError:
            return "NonpositiveError";
        case ErrorCode::NotQuadratic:
            return "NotQuadratic";
        case ErrorCode::Io:
            return "Io";
    }
    return "Unknown";
}

}  // namespace nashseek
