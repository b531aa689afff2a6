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

#include <cstddef>
#include <span>

#include "pielimits/errors.hpp"
#include "pielimits/math_kernel.hpp"

namespace pielimits {

void lambert_w0_batch(std::span<const double> in, std::span<double> out) {
  if (out.size() < in.size()) throw ValidationError("lambert_w0_batch: output span too short");
  const auto n = static_cast<std::ptrdiff_t>(in.size());
  // Exceptions cannot cross the parallel region; record the first bad index.
  std::ptrdiff_t bad = n;
#pragma omp parallel for schedule(static) reduction(min : bad)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = lambert_w0(in[static_cast<std::size_t>(i)]);
    } catch (const Error&) {
      if (i < bad) bad = i;
    }
  }
  if (bad < n) lambert_w0(in[static_cast<std::size_t>(bad)]);  // rethrows on the caller's thread
}

}  // namespace pielimits
