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

// Maximisation of the PIE bound over the integer format order M, and over
// the symbol energy n_s in the vanishing-signal limit.

#include <cstdint>
#include <limits>
#include <optional>

#include "pielimits/pie_model.hpp"

namespace pielimits {

inline constexpr std::uint64_t kMaxFormatOrder = std::numeric_limits<std::int64_t>::max();

/// Orders whose bound is within this relative distance of the peak count as
/// tied; the smallest such order is returned.
inline constexpr double kTieTolerance = 1e-12;

/// Relative slack of the local-optimality certificate. Twice the tie
/// tolerance so the smallest tied order still certifies.
inline constexpr double kCertificateTolerance = 2e-12;

struct PieResult {
  double pie_star = 0.0;         ///< bits/photon
  std::uint64_t m_star = 1;
  double n_s_star = 0.0;         ///< m_star * n_a
  bool converged = true;         ///< false when the order cap stopped the search
  bool capped = false;           ///< a user-supplied cap was binding
  std::uint64_t evaluations = 0;
};

struct OptimizeOptions {
  std::optional<std::uint64_t> m_cap;  ///< hardware limit on M; unset = unconstrained
};

/// The objective of the search: pie_bound(M n_a, n_b, M), with M = 1 and
/// orders whose n_s falls below kMinSymbolPhotons scoring 0.
double format_objective(const OperatingPoint& point, std::uint64_t order_m);

/// Integer M* maximising the bound at `point` (n_a > 0, n_b >= 0).
///
/// Doubles M until the bound drops on two consecutive doublings, ternary
/// searches the bracket around the best power of two, then hill-climbs to
/// an exact local maximum. Ties within kTieTolerance of the peak go to the
/// smaller order.
PieResult optimize_format_order(const OperatingPoint& point, const OptimizeOptions& options = {});

/// pie(M*) >= (1 - tol) pie(M* +- 1), skipping neighbours outside [1, cap].
bool satisfies_local_optimality(const OperatingPoint& point, const PieResult& result,
                                const OptimizeOptions& options = {},
                                double tolerance = kCertificateTolerance);

struct ContinuousOptimum {
  double order_m = 1.0;
  double pie = 0.0;
};

/// Diagnostic: maximiser of the bound over real M >= 1 (continuous relaxation).
ContinuousOptimum optimize_format_order_continuous(const OperatingPoint& point,
                                                   const OptimizeOptions& options = {});

struct VanishingSignalOptimum {
  double pie_star = 0.0;
  double n_s_star = 0.0;
};

/// max over n_s of pie_bound_vanishing_signal(n_s, n_b), n_b > 0.
///
/// 200-point log scan over n_s in [1e-6, 1e2], then golden-section on ln n_s
/// to a bracket width of 1e-8.
VanishingSignalOptimum optimize_vanishing_signal(double n_b);

}  // namespace pielimits
