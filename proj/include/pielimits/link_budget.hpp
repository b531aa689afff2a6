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

// Physical link budget: diffraction-limited channel transmission, detected
// signal photons per slot, information rate and symbol timing, and the
// variable-bandwidth design that holds the operating point fixed with range.

#include <cstdint>
#include <optional>

#include "pielimits/optimizer.hpp"

namespace pielimits {

namespace constants {
inline constexpr double kPlanck = 6.62607015e-34;          ///< J s, exact
inline constexpr double kSpeedOfLight = 299792458.0;       ///< m/s, exact
inline constexpr double kAstronomicalUnit = 1.495978707e11;  ///< m
}  // namespace constants

struct LinkGeometry {
  double p_tx_w = 0.0;        ///< transmitted signal power
  double d_tx_m = 0.0;        ///< transmitter aperture diameter
  double d_rx_m = 0.0;        ///< receiver aperture diameter
  double f_c_hz = 0.0;        ///< carrier frequency
  double range_m = 0.0;       ///< link range
  double eta_rx = 0.0;        ///< receiver efficiency, lumped (optics x detector), in (0, 1]
  double bandwidth_hz = 0.0;  ///< modulation bandwidth B; the slot lasts 1/B

  /// Throws ValidationError naming the first offending field.
  void validate() const;

  friend bool operator==(const LinkGeometry&, const LinkGeometry&) = default;
};

/// Diffraction-only transmission f_c^2 pi^2 D_rx^2 D_tx^2 / (16 c^2 r^2).
/// Values above 1 mean the far-field formula does not apply.
double channel_transmission(const LinkGeometry& geom);

/// Detected signal photons per second, eta_rx eta_ch P_tx / (h f_c).
double detected_photon_flux(const LinkGeometry& geom);

/// n_a = detected_photon_flux / B.
double detected_signal_photons(const LinkGeometry& geom);

/// t_s* = n_s* / detected_photon_flux.
double optimal_symbol_duration(const LinkGeometry& geom, double n_s_star);

/// Closed form (1/r^2) f_c P_tx PIE pi^2 eta_rx D_rx^2 D_tx^2 / (16 h c^2).
double information_rate_closed_form(const LinkGeometry& geom, double pie);

struct LinkOptions {
  std::optional<std::uint64_t> m_cap;
  std::optional<double> coherence_time_s;  ///< compared against t_s*
};

struct LinkAnalysis {
  double eta_ch = 0.0;
  double n_a = 0.0;
  double n_b = 0.0;
  double pie_star = 0.0;          ///< bits/photon
  std::uint64_t m_star = 1;
  double n_s_star = 0.0;
  bool converged = true;
  double rate_bps = 0.0;          ///< B n_a PIE*
  double t_s_star = 0.0;          ///< seconds
  double slot_duration_s = 0.0;   ///< 1/B
  double background_counts_per_frame = 0.0;  ///< M* n_b
  double coherent_pie = 0.0;
  double coherent_rate_bps = 0.0;
  bool near_field = false;        ///< eta_ch > 1
  std::optional<bool> within_coherence_time;
};

/// Optimises the format at the link's (n_a, n_b) and derives rate and timing.
/// Cross-checks the closed-form rate against B n_a PIE* to 1e-12 relative.
LinkAnalysis information_rate(const LinkGeometry& geom, double n_b,
                              const LinkOptions& options = {});

struct BandwidthDesignOptions {
  LinkOptions link;
  std::optional<double> bandwidth_cap_hz;
};

struct BandwidthDesign {
  LinkGeometry geometry;
  LinkAnalysis analysis;
};

/// Moves the link to `range_m` and rescales B so that n_a equals
/// `n_a_target`. The operating point, and hence M* and PIE*, are then
/// range-independent while slot and symbol durations grow as r^2. Throws
/// ValidationError if the new bandwidth exceeds the cap.
BandwidthDesign design_variable_bandwidth(const LinkGeometry& reference, double n_a_target,
                                          double n_b, double range_m,
                                          const BandwidthDesignOptions& options = {});

}  // namespace pielimits
