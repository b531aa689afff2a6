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

// Exact mutual information of the M-mode Geiger channel, used to certify
// that the relative-entropy expression is a lower bound.
//
// With X uniform over the M modes and Y the M-bit click pattern, P(y | x)
// and P(y) depend on y only through the state of mode x and the number of
// clicks among the other M - 1 modes. Summing over that count reduces the
// 2^M outcomes to 2M terms weighted by Binomial(M - 1, p_b).

#include <cstdint>
#include <span>
#include <vector>

#include "pielimits/math_kernel.hpp"
#include "pielimits/pie_model.hpp"

namespace pielimits {

inline constexpr std::uint64_t kMaxOracleOrder = 1'000'000;

/// Bound may exceed the exact value by at most this many bits (rounding).
inline constexpr double kCertificationSlack = 1e-10;

struct ChannelSpec {
  std::uint64_t order_m = 1;
  Probability p_c;
  Probability p_b;

  /// Channel seen by a format with symbol energy n_s at background n_b.
  static ChannelSpec from_photons(double n_s, double n_b, std::uint64_t order_m);

  /// Throws InfeasibleSize above kMaxOracleOrder, DomainError if p_c < p_b.
  void validate() const;
};

/// I(X;Y) in bits per symbol.
double exact_mutual_information(const ChannelSpec& spec);

struct BoundCertificate {
  double bound = 0.0;  ///< n_s * pie_bound, bits/symbol
  double exact = 0.0;  ///< exact mutual information, bits/symbol
  double margin = 0.0; ///< exact - bound

  bool holds() const { return margin >= -kCertificationSlack; }
};

BoundCertificate certify_bound(double n_s, double n_b, std::uint64_t order_m);
BoundCertificate certify_bound(const OperatingPoint& point, const ModulationFormat& format);

struct CertifyQuery {
  double n_s = 0.0;
  double n_b = 0.0;
  std::uint64_t order_m = 1;
};

/// certify_bound over a batch of queries, OpenMP-parallel.
std::vector<BoundCertificate> certify_batch(std::span<const CertifyQuery> queries);

namespace serial {
std::vector<BoundCertificate> certify_batch(std::span<const CertifyQuery> queries);
}  // namespace serial

}  // namespace pielimits
