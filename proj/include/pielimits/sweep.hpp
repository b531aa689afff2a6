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

// Grids of format-order optimisations over (n_a, n_b). The parallel sweep
// and the serial reference produce identical grids.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pielimits/optimizer.hpp"

namespace pielimits {

inline constexpr double kDefaultAxisMin = 1e-8;
inline constexpr double kDefaultAxisMax = 1.0;
inline constexpr std::size_t kDefaultAxisPoints = 50;

/// One grid cell. `error` is empty on success.
struct SweepCell {
  PieResult result;
  std::string error;

  bool ok() const { return error.empty(); }
};

class SweepGrid {
 public:
  SweepGrid(std::vector<double> n_a_axis, std::vector<double> n_b_axis);

  const std::vector<double>& n_a_axis() const { return n_a_axis_; }
  const std::vector<double>& n_b_axis() const { return n_b_axis_; }

  /// Row-major: n_a is the slow index.
  SweepCell& at(std::size_t i_a, std::size_t i_b) { return cells_[i_a * n_b_axis_.size() + i_b]; }
  const SweepCell& at(std::size_t i_a, std::size_t i_b) const {
    return cells_[i_a * n_b_axis_.size() + i_b];
  }

  std::span<SweepCell> cells() { return cells_; }
  std::span<const SweepCell> cells() const { return cells_; }

  std::size_t failed_cells() const;

  friend bool operator==(const SweepGrid& a, const SweepGrid& b);

 private:
  std::vector<double> n_a_axis_;
  std::vector<double> n_b_axis_;
  std::vector<SweepCell> cells_;
};

/// `points` log-spaced values from lo to hi inclusive.
std::vector<double> log_spaced_axis(double lo, double hi, std::size_t points);

/// Throws ValidationError unless the axis is non-empty, positive, finite and
/// strictly increasing.
void validate_axis(std::span<const double> axis, const char* name);

/// Optimises every cell with OpenMP. Per-cell failures are recorded in the
/// cell, they do not abort the sweep.
SweepGrid sweep(std::span<const double> n_a_axis, std::span<const double> n_b_axis,
                const OptimizeOptions& options = {});

namespace serial {
SweepGrid sweep(std::span<const double> n_a_axis, std::span<const double> n_b_axis,
                const OptimizeOptions& options = {});
}  // namespace serial

}  // namespace pielimits
