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

#include "pielimits/link_budget.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "pielimits/errors.hpp"

namespace pielimits {

namespace {

using constants::kPlanck;
using constants::kSpeedOfLight;

constexpr double kRateIdentityTolerance = 1e-12;

void require_positive(double v, const char* field) {
  if (!std::isfinite(v) || !(v > 0.0)) {
    throw ValidationError(std::string("link field '") + field +
                          "' must be finite and > 0, got " + std::to_string(v));
  }
}

}  // namespace

void LinkGeometry::validate() const {
  require_positive(p_tx_w, "p_tx_w");
  require_positive(d_tx_m, "d_tx_m");
  require_positive(d_rx_m, "d_rx_m");
  require_positive(f_c_hz, "f_c_hz");
  require_positive(range_m, "range_m");
  require_positive(eta_rx, "eta_rx");
  if (eta_rx > 1.0) throw ValidationError("link field 'eta_rx' must be <= 1");
  require_positive(bandwidth_hz, "bandwidth_hz");
}

double channel_transmission(const LinkGeometry& geom) {
  geom.validate();
  const double pi2 = std::numbers::pi * std::numbers::pi;
  const double apertures = geom.d_rx_m * geom.d_rx_m * geom.d_tx_m * geom.d_tx_m;
  const double fr = geom.f_c_hz / geom.range_m;
  return fr * fr * pi2 * apertures / (16.0 * kSpeedOfLight * kSpeedOfLight);
}

double detected_photon_flux(const LinkGeometry& geom) {
  return geom.eta_rx * channel_transmission(geom) * geom.p_tx_w / (kPlanck * geom.f_c_hz);
}

double detected_signal_photons(const LinkGeometry& geom) {
  return detected_photon_flux(geom) / geom.bandwidth_hz;
}

double optimal_symbol_duration(const LinkGeometry& geom, double n_s_star) {
  if (!std::isfinite(n_s_star) || !(n_s_star > 0.0)) {
    throw DomainError("n_s_star must be finite and > 0");
  }
  return n_s_star / detected_photon_flux(geom);
}

double information_rate_closed_form(const LinkGeometry& geom, double pie) {
  geom.validate();
  const double pi2 = std::numbers::pi * std::numbers::pi;
  const double apertures = geom.d_rx_m * geom.d_rx_m * geom.d_tx_m * geom.d_tx_m;
  return geom.f_c_hz * geom.p_tx_w * pie * pi2 * geom.eta_rx * apertures /
         (geom.range_m * geom.range_m * 16.0 * kPlanck * kSpeedOfLight * kSpeedOfLight);
}

LinkAnalysis information_rate(const LinkGeometry& geom, double n_b, const LinkOptions& options) {
  geom.validate();
  LinkAnalysis a;
  a.eta_ch = channel_transmission(geom);
  a.near_field = a.eta_ch > 1.0;
  a.n_a = detected_signal_photons(geom);
  a.n_b = n_b;

  const PieResult best = optimize_format_order({a.n_a, n_b}, OptimizeOptions{options.m_cap});
  a.pie_star = best.pie_star;
  a.m_star = best.m_star;
  a.n_s_star = best.n_s_star;
  a.converged = best.converged;

  a.rate_bps = geom.bandwidth_hz * a.n_a * a.pie_star;
  const double closed = information_rate_closed_form(geom, a.pie_star);
  if (std::abs(closed - a.rate_bps) > kRateIdentityTolerance * std::abs(a.rate_bps)) {
    throw std::logic_error("information rate identity violated: B n_a PIE != closed form");
  }

  a.t_s_star = optimal_symbol_duration(geom, a.n_s_star);
  a.slot_duration_s = 1.0 / geom.bandwidth_hz;
  a.background_counts_per_frame = static_cast<double>(a.m_star) * n_b;
  a.coherent_pie = coherent_detection_limit(n_b);
  a.coherent_rate_bps = geom.bandwidth_hz * a.n_a * a.coherent_pie;
  if (options.coherence_time_s) a.within_coherence_time = a.t_s_star < *options.coherence_time_s;
  return a;
}

BandwidthDesign design_variable_bandwidth(const LinkGeometry& reference, double n_a_target,
                                          double n_b, double range_m,
                                          const BandwidthDesignOptions& options) {
  reference.validate();
  if (!std::isfinite(n_a_target) || !(n_a_target > 0.0)) {
    throw ValidationError("n_a_target must be finite and > 0");
  }
  if (!std::isfinite(range_m) || !(range_m > 0.0)) {
    throw ValidationError("link field 'range_m' must be finite and > 0");
  }

  BandwidthDesign d;
  d.geometry = reference;
  d.geometry.range_m = range_m;
  d.geometry.bandwidth_hz = detected_photon_flux(d.geometry) / n_a_target;
  if (options.bandwidth_cap_hz && d.geometry.bandwidth_hz > *options.bandwidth_cap_hz) {
    throw ValidationError("required bandwidth " + std::to_string(d.geometry.bandwidth_hz) +
                          " Hz exceeds the cap of " + std::to_string(*options.bandwidth_cap_hz) +
                          " Hz");
  }
  d.analysis = information_rate(d.geometry, n_b, options.link);
  return d;
}

}  // namespace pielimits
