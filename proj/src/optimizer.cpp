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

#include "pielimits/optimizer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "pielimits/errors.hpp"

namespace pielimits {

namespace {

constexpr std::uint64_t kExhaustiveFallbackWidth = std::uint64_t{1} << 20;
constexpr double kVanishingScanLo = 1e-6;
constexpr double kVanishingScanHi = 1e2;
constexpr int kVanishingScanPoints = 200;
constexpr double kGoldenTolerance = 1e-8;
constexpr double kInvPhi = 0.6180339887498949;

class Objective {
 public:
  explicit Objective(const OperatingPoint& point) : point_(point) {}

  double operator()(std::uint64_t m) {
    ++evaluations_;
    return format_objective(point_, m);
  }

  std::uint64_t evaluations() const { return evaluations_; }

 private:
  OperatingPoint point_;
  std::uint64_t evaluations_ = 0;
};

std::uint64_t effective_cap(const OptimizeOptions& options) {
  if (!options.m_cap) return kMaxFormatOrder;
  if (*options.m_cap < 1) throw DomainError("m_cap must be >= 1");
  return std::min(*options.m_cap, kMaxFormatOrder);
}

void validate_search_point(const OperatingPoint& point) {
  point.validate();
  if (!(point.n_a > 0.0)) {
    throw DomainError("n_a must be > 0 to optimise the format order, got " +
                      std::to_string(point.n_a));
  }
}

// Largest value in [lo, hi]; first index wins ties.
std::uint64_t scan_best(Objective& f, std::uint64_t lo, std::uint64_t hi) {
  std::uint64_t best = lo;
  double best_v = f(lo);
  for (std::uint64_t m = lo + 1; m <= hi && m > lo; ++m) {
    const double v = f(m);
    if (v > best_v) {
      best_v = v;
      best = m;
    }
  }
  return best;
}

bool locally_maximal(Objective& f, std::uint64_t m, std::uint64_t cap) {
  const double v = f(m);
  if (m > 1 && f(m - 1) > v) return false;
  if (m < cap && f(m + 1) > v) return false;
  return true;
}

template <typename F>
double golden_section_max(F&& f, double a, double b, double tol) {
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

double format_objective(const OperatingPoint& point, std::uint64_t order_m) {
  if (order_m < 1) throw DomainError("format order M must be >= 1");
  if (order_m == 1) return 0.0;
  const double n_s = static_cast<double>(order_m) * point.n_a;
  if (n_s < kMinSymbolPhotons) return 0.0;
  return pie_bound(n_s, point.n_b, order_m);
}

PieResult optimize_format_order(const OperatingPoint& point, const OptimizeOptions& options) {
  validate_search_point(point);
  const std::uint64_t cap = effective_cap(options);
  Objective f(point);

  // Geometric bracketing.
  std::uint64_t best_m = 1;
  double best_v = f(1);
  double prev = best_v;
  int declines = 0;
  bool hit_cap = false;
  for (std::uint64_t m = 1;;) {
    if (m > cap / 2) {
      hit_cap = true;
      break;
    }
    m *= 2;
    const double v = f(m);
    if (v > best_v) {
      best_v = v;
      best_m = m;
    }
    declines = v < prev ? declines + 1 : 0;
    prev = v;
    if (declines >= 2) break;
  }

  std::uint64_t lo = best_m > 1 ? best_m / 2 : 1;
  std::uint64_t hi = hit_cap ? cap : std::min(cap, best_m * 2);
  if (hit_cap && f(cap) > best_v) best_m = cap;

  // Ternary search on the integer bracket.
  while (hi - lo > 2) {
    const std::uint64_t third = (hi - lo) / 3;
    const std::uint64_t m1 = lo + third;
    const std::uint64_t m2 = hi - third;
    if (f(m1) < f(m2)) {
      lo = m1 + 1;
    } else {
      hi = m2;
    }
  }
  std::uint64_t m = scan_best(f, lo, hi);

  // Certificate; fall back to an exhaustive scan of the original bracket when
  // unimodality failed, otherwise climb to the exact local maximum.
  if (!locally_maximal(f, m, cap)) {
    const std::uint64_t b_lo = best_m > 1 ? best_m / 2 : 1;
    const std::uint64_t b_hi = hit_cap ? cap : std::min(cap, best_m * 2);
    if (b_hi - b_lo <= kExhaustiveFallbackWidth) m = scan_best(f, b_lo, b_hi);
    double v = f(m);
    for (;;) {
      if (m < cap) {
        const double up = f(m + 1);
        if (up > v) {
          ++m;
          v = up;
          continue;
        }
      }
      if (m > 1) {
        const double down = f(m - 1);
        if (down > v) {
          --m;
          v = down;
          continue;
        }
      }
      break;
    }
  }

  const double peak = f(m);
  const bool binding = m == cap && cap > 1 && f(cap - 1) < peak;

  // Smallest order still tied with the peak.
  const double floor_v = peak * (1.0 - kTieTolerance);
  double v = peak;
  while (m > 1) {
    const double down = f(m - 1);
    if (down < floor_v) break;
    --m;
    v = down;
  }

  PieResult result;
  result.pie_star = v;
  result.m_star = m;
  result.n_s_star = static_cast<double>(m) * point.n_a;
  result.converged = !binding;
  result.capped = binding && options.m_cap.has_value();
  result.evaluations = f.evaluations();
  return result;
}

bool satisfies_local_optimality(const OperatingPoint& point, const PieResult& result,
                                const OptimizeOptions& options, double tolerance) {
  const std::uint64_t cap = effective_cap(options);
  const std::uint64_t m = result.m_star;
  const double v = format_objective(point, m);
  if (v != result.pie_star) return false;
  if (m > 1 && v < (1.0 - tolerance) * format_objective(point, m - 1)) return false;
  if (m < cap && v < (1.0 - tolerance) * format_objective(point, m + 1)) return false;
  return true;
}

ContinuousOptimum optimize_format_order_continuous(const OperatingPoint& point,
                                                   const OptimizeOptions& options) {
  const PieResult integer = optimize_format_order(point, options);
  const double cap = static_cast<double>(effective_cap(options));
  const double floor_m = std::max(1.0, kMinSymbolPhotons / point.n_a);
  const double lo = std::max(floor_m, static_cast<double>(integer.m_star) - 1.0);
  const double hi = std::min(cap, static_cast<double>(integer.m_star) + 1.0);
  auto f = [&](double log_m) {
    const double m = std::exp(log_m);
    return m <= 1.0 ? 0.0 : pie_bound_relaxed(m * point.n_a, point.n_b, m);
  };
  if (hi <= lo) return {lo, f(std::log(lo))};
  const double best = golden_section_max(f, std::log(lo), std::log(hi), 1e-12);
  return {std::exp(best), f(best)};
}

VanishingSignalOptimum optimize_vanishing_signal(double n_b) {
  if (!std::isfinite(n_b) || n_b <= 0.0) {
    throw DomainError("n_b must be finite and > 0, got " + std::to_string(n_b));
  }
  auto f = [n_b](double log_ns) { return pie_bound_vanishing_signal(std::exp(log_ns), n_b); };

  const double a = std::log(kVanishingScanLo);
  const double b = std::log(kVanishingScanHi);
  const double step = (b - a) / (kVanishingScanPoints - 1);
  int best = 0;
  double best_v = f(a);
  for (int i = 1; i < kVanishingScanPoints; ++i) {
    const double v = f(a + step * i);
    if (v > best_v) {
      best_v = v;
      best = i;
    }
  }
  const double lo = a + step * std::max(best - 1, 0);
  const double hi = a + step * std::min(best + 1, kVanishingScanPoints - 1);
  const double t = golden_section_max(f, lo, hi, kGoldenTolerance);
  double n_s = std::exp(t);
  double v = f(t);
  if (best_v > v) {  // golden section drifted off a noise-flat top
    n_s = std::exp(a + step * best);
    v = best_v;
  }
  return {v, n_s};
}

}  // namespace pielimits
