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

// Special functions and binary information measures shared by the PIE
// model, the optimizer and the exact-channel oracle.

#include <numbers>
#include <span>

namespace pielimits {

inline constexpr double kLog2E = std::numbers::log2e;

/// A probability carried together with its complement.
///
/// Click probabilities have the form 1 - exp(-mu). For mu << 1 the value is
/// tiny and for mu >> 1 the complement is; storing both keeps each side at
/// full relative precision.
class Probability {
 public:
  constexpr Probability() = default;

  /// Wraps p in [0, 1]; the complement is formed as 1 - p.
  static Probability of(double p);

  /// P(at least one count) for a Poisson count of mean `mean_count`.
  static Probability of_click(double mean_count);

  /// Takes both sides as given. They must each lie in [0, 1] and sum to 1
  /// within rounding.
  static Probability from_parts(double value, double complement);

  constexpr double value() const { return value_; }
  constexpr double complement() const { return complement_; }

 private:
  constexpr Probability(double value, double complement)
      : value_(value), complement_(complement) {}

  double value_ = 0.0;
  double complement_ = 1.0;
};

/// Principal branch W0 of the Lambert W function on x >= 0.
///
/// Halley iteration started from the asymptotic guess (series guess for
/// small x). Satisfies |w e^w - x| <= 1e-12 max(1, x). Throws DomainError
/// for negative or non-finite x.
double lambert_w0(double x);

/// ln x - ln ln x, the leading terms of W0 for large x. Requires x > e.
double lambert_w0_asymptotic(double x);

/// Evaluates lambert_w0 element-wise; `out` must be at least as long as `in`.
/// Parallelised with OpenMP.
void lambert_w0_batch(std::span<const double> in, std::span<double> out);

namespace serial {
/// Reference loop for lambert_w0_batch.
void lambert_w0_batch(std::span<const double> in, std::span<double> out);
}  // namespace serial

/// D(p || q) between Bernoulli(p) and Bernoulli(q), in bits.
///
/// Uses 0 log(0/q) = 0. Throws DivergenceInfinite when p > 0 and q = 0, or
/// when p < 1 and q = 1.
double binary_relative_entropy(Probability p, Probability q);

/// D(p || q) in nats when the difference p - q is known to better precision
/// than the subtraction of the stored values would give. `gap` must equal
/// p - q.
double binary_relative_entropy_nats(Probability p, Probability q, double gap);

/// h(p) in bits.
double binary_entropy(Probability p);

}  // namespace pielimits
