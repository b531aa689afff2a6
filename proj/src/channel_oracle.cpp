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

#include "pielimits/channel_oracle.hpp"

#include <math.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "pielimits/errors.hpp"

namespace pielimits {

namespace {

// Binomial mass beyond this many standard deviations is below e^-800.
constexpr double kWindowSigmas = 40.0;
constexpr double kWindowPad = 30.0;
constexpr double kUnderflowLog = -745.0;

class NeumaierSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

double log_gamma(double x) {
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

}  // namespace

ChannelSpec ChannelSpec::from_photons(double n_s, double n_b, std::uint64_t order_m) {
  const auto probs = photocount_probabilities(n_s, n_b);
  ChannelSpec spec{order_m, probs.signal, probs.background};
  spec.validate();
  return spec;
}

void ChannelSpec::validate() const {
  if (order_m < 1) throw DomainError("format order M must be >= 1");
  if (order_m > kMaxOracleOrder) {
    throw InfeasibleSize("exact mutual information supports M <= 1000000, got " +
                         std::to_string(order_m));
  }
  if (p_c.value() < p_b.value()) throw DomainError("channel requires p_c >= p_b");
}

double exact_mutual_information(const ChannelSpec& spec) {
  spec.validate();
  const std::uint64_t m = spec.order_m;
  const double pc = spec.p_c.value();
  const double pc_bar = spec.p_c.complement();
  const double pb = spec.p_b.value();
  const double pb_bar = spec.p_b.complement();
  if (m == 1 || pc == pb) return 0.0;

  // Here p_c > p_b, so p_c > 0 and p_b < 1, hence a > 0.
  const double a = pc * pb_bar;
  const double b = pc_bar * pb;
  const double ratio = b / a;
  const double md = static_cast<double>(m);
  const bool off_terms = pc_bar > 0.0 && pb > 0.0;

  // Window of background-click counts j among the other M - 1 modes.
  const double trials = md - 1.0;
  std::uint64_t j_lo = 0;
  std::uint64_t j_hi = m - 1;
  if (pb == 0.0) {
    j_hi = 0;
  } else {
    const double mean = trials * pb;
    const double spread = kWindowSigmas * std::sqrt(trials * pb * pb_bar) + kWindowPad;
    j_lo = static_cast<std::uint64_t>(std::max(0.0, std::floor(mean - spread)));
    j_hi = static_cast<std::uint64_t>(std::min(trials, std::ceil(mean + spread)));
  }

  const double log_pb = pb > 0.0 ? std::log(pb) : 0.0;
  const double log_pb_bar = pb_bar > 0.0 ? std::log(pb_bar) : 0.0;
  const double log_trials_fact = log_gamma(md);

  NeumaierSum weight_sum;
  NeumaierSum on_sum;
  NeumaierSum off_sum;
  for (std::uint64_t j = j_lo; j <= j_hi; ++j) {
    const double jd = static_cast<double>(j);
    double log_w = 0.0;
    if (pb > 0.0) {
      log_w = log_trials_fact - log_gamma(jd + 1.0) - log_gamma(md - jd) + jd * log_pb +
              (trials - jd) * log_pb_bar;
    }
    if (log_w < kUnderflowLog) continue;
    const double w = std::exp(log_w);
    weight_sum.add(w);
    // Signal mode clicked: log(P(y|x)/P(y)) = -log(((j+1) + (M-1-j) b/a) / M).
    on_sum.add(-w * std::log((jd + 1.0 + (trials - jd) * ratio) / md));
    if (off_terms) {
      // Signal mode dark: log(M b / (j a + (M - j) b)).
      off_sum.add(w * std::log(md * ratio / (jd + (md - jd) * ratio)));
    }
  }

  const double nats = (pc * on_sum.value() + pc_bar * off_sum.value()) / weight_sum.value();
  return std::max(0.0, nats * kLog2E);
}

BoundCertificate certify_bound(double n_s, double n_b, std::uint64_t order_m) {
  const ChannelSpec spec = ChannelSpec::from_photons(n_s, n_b, order_m);
  BoundCertificate c;
  c.exact = exact_mutual_information(spec);
  c.bound = n_s * pie_bound(n_s, n_b, order_m);
  c.margin = c.exact - c.bound;
  return c;
}

BoundCertificate certify_bound(const OperatingPoint& point, const ModulationFormat& format) {
  point.validate();
  format.validate();
  pie_bound(point, format);  // consistency check of the pairing
  return certify_bound(format.n_s, point.n_b, format.order_m);
}

std::vector<BoundCertificate> certify_batch(std::span<const CertifyQuery> queries) {
  std::vector<BoundCertificate> out(queries.size());
  const auto n = static_cast<std::ptrdiff_t>(queries.size());
  std::ptrdiff_t bad = n;
#pragma omp parallel for schedule(dynamic, 4) reduction(min : bad)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto& q = queries[static_cast<std::size_t>(i)];
    try {
      out[static_cast<std::size_t>(i)] = certify_bound(q.n_s, q.n_b, q.order_m);
    } catch (const Error&) {
      if (i < bad) bad = i;
    }
  }
  if (bad < n) {
    const auto& q = queries[static_cast<std::size_t>(bad)];
    certify_bound(q.n_s, q.n_b, q.order_m);  // rethrows on the caller's thread
  }
  return out;
}

namespace serial {

std::vector<BoundCertificate> certify_batch(std::span<const CertifyQuery> queries) {
  std::vector<BoundCertificate> out;
  out.reserve(queries.size());
  for (const auto& q : queries) out.push_back(certify_bound(q.n_s, q.n_b, q.order_m));
  return out;
}

}  // namespace serial

}  // namespace pielimits
