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

// Geiger-detection channel model for a scalable M-ary format and the closed
// form photon-information-efficiency expressions built on it. All PIE values
// are in bits per photon.

#include <cstdint>

#include "pielimits/math_kernel.hpp"

namespace pielimits {

/// Symbol energies below this are rejected by every per-photon quantity.
inline constexpr double kMinSymbolPhotons = 1e-12;

/// Mean detected signal (n_a) and background (n_b) photons per slot.
struct OperatingPoint {
  double n_a = 0.0;
  double n_b = 0.0;

  /// Throws DomainError unless both are finite and >= 0.
  void validate() const;
};

/// Format order M and the symbol energy n_s carried by one of the M modes.
struct ModulationFormat {
  std::uint64_t order_m = 1;
  double n_s = 0.0;

  /// Format of order m at the given point, n_s = m * n_a.
  static ModulationFormat for_point(const OperatingPoint& point, std::uint64_t order_m);

  void validate() const;
};

struct PhotocountProbabilities {
  Probability signal;      ///< p_c, the mode carrying the symbol energy
  Probability background;  ///< p_b, every other mode
};

/// p_c = 1 - exp(-n_s - n_b), p_b = 1 - exp(-n_b).
PhotocountProbabilities photocount_probabilities(double n_s, double n_b);

/// Relative-entropy lower bound on PIE,
/// D(p_c || p_c/M + (1 - 1/M) p_b) / n_s. Zero for M = 1.
double pie_bound(double n_s, double n_b, std::uint64_t order_m);

/// Same bound for a format built at `point`; n_s must equal M n_a.
double pie_bound(const OperatingPoint& point, const ModulationFormat& format);

/// Bound with a real-valued order M >= 1; the continuous relaxation of the
/// integer search. pie_bound(n_s, n_b, m) == pie_bound_relaxed(n_s, n_b, m).
double pie_bound_relaxed(double n_s, double n_b, double order_m);

/// M -> infinity limit at fixed n_s: D(p_c || p_b) / n_s. Throws
/// DivergenceInfinite for n_b = 0, where the limit is unbounded.
double pie_bound_vanishing_signal(double n_s, double n_b);

/// Closed-form estimate of the n_a -> 0 PIE limit,
/// (W(2/n_b) - 2 + 1/W(2/n_b)) log2(e). Only meaningful for n_b << 1; it
/// goes negative once 2/n_b < e.
double pie_approx_lambert(double n_b);

/// 2 log2(e) / (1 + n_b), the PIE ceiling of coherent detection.
double coherent_detection_limit(double n_b);

/// log2 M, the noiseless small-n_s ceiling.
double noiseless_pie(const ModulationFormat& format);

}  // namespace pielimits
