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

#include "pielimits/numeric_format.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "pielimits/errors.hpp"
#include "pielimits/link_budget.hpp"

namespace pielimits {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, res.ptr};
}

double parse_length(std::string_view text) {
  const char* first = text.data();
  const char* last = text.data() + text.size();
  double value = 0.0;
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr == first) {
    throw ValidationError("cannot parse length '" + std::string(text) + "'");
  }
  const std::string_view unit(res.ptr, static_cast<std::size_t>(last - res.ptr));
  double scale = 1.0;
  if (unit.empty() || unit == "m") {
    scale = 1.0;
  } else if (unit == "km") {
    scale = 1e3;
  } else if (unit == "AU" || unit == "au") {
    scale = constants::kAstronomicalUnit;
  } else {
    throw ValidationError("unknown length unit '" + std::string(unit) + "' (use m, km or AU)");
  }
  const double metres = value * scale;
  if (!std::isfinite(metres) || !(metres > 0.0)) {
    throw ValidationError("length must be finite and > 0: '" + std::string(text) + "'");
  }
  return metres;
}

}  // namespace pielimits
