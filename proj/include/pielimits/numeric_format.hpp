// Copyright 2026 The pielimits Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>

namespace pielimits {

/// Shortest decimal string that parses back to exactly `v` (at most 17
/// significant digits). Non-finite values print as nan, inf, -inf.
std::string format_double(double v);

/// Parses a length with an optional unit suffix: m, km or AU
/// (1 AU = 1.495978707e11 m). A bare number is metres.
double parse_length(std::string_view text);

}  // namespace pielimits
