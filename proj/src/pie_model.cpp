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

#include "pielimits/pie_model.hpp"

#include <cmath>
#include <string>

#include "pielimits/errors.hpp"

namespace pielimits {

namespace {

void require_count(double v, const char* name) {
  if (!std::isfinite(v) || v < 0.0) {
    throw DomainError(std::string(name) + " must be finite and >= 0, got " + std::to_string(v));
  }
}

void require_symbol_photons(double n_s) {
  if (!std::isfinite(n_s) || n_s < kMinSymbolPhotons) {
    throw DomainError("n_s must be finite and >= 1e-12 for a per-photon bound, got " +
                      std::to_string(n_s));
  }
}

}  // namespace

void OperatingPoint::validate() const {
  require_count(n_a, "n_a");
  require_count(n_b, "n_b");
}

ModulationFormat ModulationFormat::for_point(const OperatingPoint& point, std::uint64_t order_m) {
  point.validate();
  ModulationFormat f{order_m, static_cast<double>(order_m) * point.n_a};
  f.validate();
  return f;
}

void ModulationFormat::validate() const {
  if (order_m < 1) throw DomainError("format order M must be >= 1");
  require_count(n_s, "n_s");
}

PhotocountProbabilities photocount_probabilities(double n_s, double n_b) {
  require_count(n_s, "n_s");
  require_count(n_b, "n_b");
  return {Probability::of_click(n_s + n_b), Probability::of_click(n_b)};
}

double pie_bound_relaxed(double n_s, double n_b, double order_m) {
  require_symbol_photons(n_s);
  require_count(n_b, "n_b");
  if (!(order_m >= 1.0) || std::isinf(order_m)) {
    throw DomainError("format order M must be finite and >= 1");
  }

  // p_c - p_b = e^{-n_b} (1 - e^{-n_s}) exactly; build the mixture from it.
  const Probability p_b = Probability::of_click(n_b);
  const double excess = p_b.complement() * -std::expm1(-n_s);
  const double gap = excess * (1.0 - 1.0 / order_m);
  const double pc_value = p_b.value() + excess;
  const double pc_complement = std::exp(-(n_s + n_b));
  const auto p_c = Probability::from_parts(pc_value > 1.0 ? 1.0 : pc_value, pc_complement);
  const double q_value = p_b.value() + excess / order_m;
  const auto q = Probability::from_parts(q_value > 1.0 ? 1.0 : q_value, pc_complement + gap);

  return kLog2E * binary_relative_entropy_nats(p_c, q, gap) / n_s;
}

double pie_bound(double n_s, double n_b, std::uint64_t order_m) {
  if (order_m < 1) throw DomainError("format order M must be >= 1");
  return pie_bound_relaxed(n_s, n_b, static_cast<double>(order_m));
}

double pie_bound(const OperatingPoint& point, const ModulationFormat& format) {
  point.validate();
  format.validate();
  const double expected = static_cast<double>(format.order_m) * point.n_a;
  if (std::abs(format.n_s - expected) > 1e-12 * expected) {
    throw DomainError("format is inconsistent with the operating point: n_s != M * n_a");
  }
  return pie_bound(format.n_s, point.n_b, format.order_m);
}

double pie_bound_vanishing_signal(double n_s, double n_b) {
  require_symbol_photons(n_s);
  require_count(n_b, "n_b");
  const Probability p_b = Probability::of_click(n_b);
  const double excess = p_b.complement() * -std::expm1(-n_s);
  const double pc_value = p_b.value() + excess;
  const auto p_c =
      Probability::from_parts(pc_value > 1.0 ? 1.0 : pc_value, std::exp(-(n_s + n_b)));
  return kLog2E * binary_relative_entropy_nats(p_c, p_b, excess) / n_s;
}

double pie_approx_lambert(double n_b) {
  if (!std::isfinite(n_b) || n_b <= 0.0) {
    throw DomainError("n_b must be finite and > 0, got " + std::to_string(n_b));
  }
  const double w = lambert_w0(2.0 / n_b);
  return (w - 2.0 + 1.0 / w) * kLog2E;
}

double coherent_detection_limit(double n_b) {
  require_count(n_b, "n_b");
  return 2.0 * kLog2E / (1.0 + n_b);
}

double noiseless_pie(const ModulationFormat& format) {
  format.validate();
  return std::log2(static_cast<double>(format.order_m));
}

}  // namespace pielimits
