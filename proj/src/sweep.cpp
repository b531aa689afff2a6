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

#include "pielimits/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pielimits/errors.hpp"

namespace pielimits {

namespace {

SweepCell evaluate_cell(double n_a, double n_b, const OptimizeOptions& options) {
  SweepCell cell;
  try {
    cell.result = optimize_format_order({n_a, n_b}, options);
  } catch (const Error& e) {
    cell.error = e.what();
  }
  return cell;
}

SweepGrid prepare(std::span<const double> n_a_axis, std::span<const double> n_b_axis) {
  validate_axis(n_a_axis, "n_a axis");
  validate_axis(n_b_axis, "n_b axis");
  return SweepGrid({n_a_axis.begin(), n_a_axis.end()}, {n_b_axis.begin(), n_b_axis.end()});
}

}  // namespace

SweepGrid::SweepGrid(std::vector<double> n_a_axis, std::vector<double> n_b_axis)
    : n_a_axis_(std::move(n_a_axis)),
      n_b_axis_(std::move(n_b_axis)),
      cells_(n_a_axis_.size() * n_b_axis_.size()) {}

std::size_t SweepGrid::failed_cells() const {
  return static_cast<std::size_t>(
      std::count_if(cells_.begin(), cells_.end(), [](const SweepCell& c) { return !c.ok(); }));
}

bool operator==(const SweepGrid& a, const SweepGrid& b) {
  if (a.n_a_axis_ != b.n_a_axis_ || a.n_b_axis_ != b.n_b_axis_) return false;
  for (std::size_t i = 0; i < a.cells_.size(); ++i) {
    const auto& x = a.cells_[i];
    const auto& y = b.cells_[i];
    if (x.error != y.error || x.result.pie_star != y.result.pie_star ||
        x.result.m_star != y.result.m_star || x.result.n_s_star != y.result.n_s_star ||
        x.result.converged != y.result.converged || x.result.capped != y.result.capped) {
      return false;
    }
  }
  return true;
}

std::vector<double> log_spaced_axis(double lo, double hi, std::size_t points) {
  if (!(lo > 0.0) || !(hi > lo) || !std::isfinite(hi)) {
    throw ValidationError("log axis needs 0 < lo < hi, both finite");
  }
  if (points < 2) throw ValidationError("log axis needs at least 2 points");
  std::vector<double> axis(points);
  const double a = std::log10(lo);
  const double step = (std::log10(hi) - a) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    axis[i] = std::pow(10.0, a + step * static_cast<double>(i));
  }
  axis.front() = lo;
  axis.back() = hi;
  return axis;
}

void validate_axis(std::span<const double> axis, const char* name) {
  if (axis.empty()) throw ValidationError(std::string(name) + " is empty");
  for (std::size_t i = 0; i < axis.size(); ++i) {
    if (!std::isfinite(axis[i]) || !(axis[i] > 0.0)) {
      throw ValidationError(std::string(name) + " values must be finite and > 0");
    }
    if (i > 0 && !(axis[i] > axis[i - 1])) {
      throw ValidationError(std::string(name) + " must be strictly increasing");
    }
  }
}

SweepGrid sweep(std::span<const double> n_a_axis, std::span<const double> n_b_axis,
                const OptimizeOptions& options) {
  SweepGrid grid = prepare(n_a_axis, n_b_axis);
  auto cells = grid.cells();
  const auto n = static_cast<std::ptrdiff_t>(cells.size());
  const std::size_t nb = n_b_axis.size();
  // Cells cost anywhere from ~10 to ~100 bound evaluations.
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    cells[idx] = evaluate_cell(n_a_axis[idx / nb], n_b_axis[idx % nb], options);
  }
  return grid;
}

namespace serial {

SweepGrid sweep(std::span<const double> n_a_axis, std::span<const double> n_b_axis,
                const OptimizeOptions& options) {
  SweepGrid grid = prepare(n_a_axis, n_b_axis);
  for (std::size_t i = 0; i < n_a_axis.size(); ++i) {
    for (std::size_t j = 0; j < n_b_axis.size(); ++j) {
      grid.at(i, j) = evaluate_cell(n_a_axis[i], n_b_axis[j], options);
    }
  }
  return grid;
}

}  // namespace serial

}  // namespace pielimits
