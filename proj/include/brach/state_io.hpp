// Copyright 2026 The brach Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BRACH_STATE_IO_HPP
#define BRACH_STATE_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "brach/geometry.hpp"

namespace brach::io {

/// Inputs whose norm is further than this from 1 are normalised (or rejected when strict).
inline constexpr double kNormSlack = 1e-6;

/// Parses {"dim": n, "re": [...], "im": [...]}. `source` names the input in messages;
/// warnings about normalisation go to `warnings`.
StateVector parse_state(const std::string& text, const std::string& source, bool strict,
                        std::ostream& warnings);

StateVector read_state_file(const std::string& path, bool strict, std::ostream& warnings);

nlohmann::json state_to_json(const StateVector& state);
nlohmann::json matrix_to_json(const ComplexMatrix& m);

/// Shortest-exact decimal with 17 significant digits, '.' separator, no locale.
std::string format_double(double x);

/// Writes `content` to `path` through a temporary file and rename; "-" writes to `out`.
void write_output(const std::string& path, const std::string& content, std::ostream& out);

}  // namespace brach::io

#endif  // BRACH_STATE_IO_HPP
