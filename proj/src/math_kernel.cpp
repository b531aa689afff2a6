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

#include "pielimits/math_kernel.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "pielimits/errors.hpp"

namespace pielimits {

namespace {

constexpr int kMaxHalleySteps = 32;
constexpr double kProbabilitySlack = 1e-12;

double checked_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError(std::string(what) + " must lie in [0, 1], got " + std::to_string(p));
  }
  return p;
}

double initial_guess(double x) {
  if (x < 0.5) return x * (1.0 - x);
  if (x <= std::numbers::e) return std::log1p(x) * 0.8;
  const double l1 = std::log(x);
  const double l2 = std::log(l1);
  return l1 - l2 + l2 / l1;
}

// ln(p/q) given p - q. Near p = q the log1p form keeps relative precision.
double log_ratio(double p, double q, double gap) {
  const double rel = gap / q;
  if (std::abs(rel) <= 0.5) return std::log1p(rel);
  return std::log(p / q);
}

}  // namespace

Probability Probability::of(double p) {
  checked_probability(p, "probability");
  return {p, 1.0 - p};
}

Probability Probability::of_click(double mean_count) {
  if (!(mean_count >= 0.0) || std::isinf(mean_count)) {
    throw DomainError("mean photon count must be finite and >= 0, got " +
                      std::to_string(mean_count));
  }
  return {-std::expm1(-mean_count), std::exp(-mean_count)};
}

Probability Probability::from_parts(double value, double complement) {
  checked_probability(value, "probability");
  checked_probability(complement, "probability complement");
  if (std::abs(value + complement - 1.0) > kProbabilitySlack) {
    throw DomainError("probability and complement do not sum to one");
  }
  return {value, complement};
}

double lambert_w0(double x) {
  if (!std::isfinite(x) || x < 0.0) {
    throw DomainError("lambert_w0 requires finite x >= 0, got " + std::to_string(x));
  }
  if (x == 0.0) return 0.0;

  double w = initial_guess(x);
  for (int i = 0; i < kMaxHalleySteps; ++i) {
    // f / e^w, written so e^w never overflows for large x.
    const double r = w - x * std::exp(-w);
    const double denom = (w + 1.0) - (w + 2.0) * r / (2.0 * w + 2.0);
    const double step = r / denom;
    w -= step;
    if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(w)) break;
  }
  return w;
}

double lambert_w0_asymptotic(double x) {
  if (!(x > std::numbers::e) || std::isinf(x)) {
    throw DomainError("lambert_w0_asymptotic requires finite x > e, got " + std::to_string(x));
  }
  const double lx = std::log(x);
  return lx - std::log(lx);
}

namespace serial {

void lambert_w0_batch(std::span<const double> in, std::span<double> out) {
  if (out.size() < in.size()) throw ValidationError("lambert_w0_batch: output span too short");
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = lambert_w0(in[i]);
}

}  // namespace serial

double binary_relative_entropy_nats(Probability p, Probability q, double gap) {
  double total = 0.0;
  if (p.value() > 0.0) {
    if (q.value() == 0.0) {
      throw DivergenceInfinite("relative entropy is infinite: p > 0 where q = 0");
    }
    total += p.value() * log_ratio(p.value(), q.value(), gap);
  }
  if (p.complement() > 0.0) {
    if (q.complement() == 0.0) {
      throw DivergenceInfinite("relative entropy is infinite: p < 1 where q = 1");
    }
    total += p.complement() * log_ratio(p.complement(), q.complement(), -gap);
  }
  return total > 0.0 ? total : 0.0;
}

double binary_relative_entropy(Probability p, Probability q) {
  // Subtract whichever side is small; it carries the significant digits.
  const bool low = p.value() <= 0.5 && q.value() <= 0.5;
  const double gap = low ? p.value() - q.value() : q.complement() - p.complement();
  return kLog2E * binary_relative_entropy_nats(p, q, gap);
}

double binary_entropy(Probability p) {
  double h = 0.0;
  if (p.value() > 0.0) h -= p.value() * std::log(p.value());
  if (p.complement() > 0.0) h -= p.complement() * std::log(p.complement());
  return kLog2E * h;
}

}  // namespace pielimits
